#include "colrec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eigen_interop.hpp"

namespace colrec {

namespace {
constexpr double kRankTolerance = 1e-12;   // relative to sigma_1
constexpr double kSymmetryTolerance = 1e-9;
constexpr double kGapTolerance = 1e-12;    // relative to |lambda_1|
}  // namespace

ThinQrResult thin_qr(const DenseMatrix& a) {
    if (a.rows() < a.cols() || a.cols() == 0) {
        throw ContractViolation("thin_qr needs an N x r input with N >= r >= 1");
    }
    a.require_finite("thin_qr input");
    const Eigen::MatrixXd m = as_eigen(a);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    const double s1 = sv(0);
    const double sr = sv(sv.size() - 1);
    if (!(sr > kRankTolerance * s1)) {
        throw RankDeficient("thin_qr input is rank deficient (sigma_min = " +
                                std::to_string(sr) + ")",
                            sr);
    }

    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd r = qr.matrixQR().topRows(a.cols()).triangularView<Eigen::Upper>();
    // Fix the sign convention: positive diagonal of R.
    for (int j = 0; j < r.rows(); ++j) {
        if (r(j, j) < 0) {
            r.row(j) *= -1.0;
            q.col(j) *= -1.0;
        }
    }
    return ThinQrResult{SubspaceEstimate(from_eigen(q)), from_eigen(r)};
}

TopEigvecsResult top_r_eigvecs(const DenseMatrix& c, int r) {
    if (c.rows() != c.cols()) {
        throw ContractViolation("top_r_eigvecs needs a square matrix");
    }
    const int n = c.rows();
    if (r < 1 || r > n) {
        throw ContractViolation("top_r_eigvecs rank out of range");
    }
    c.require_finite("top_r_eigvecs input");
    const Eigen::MatrixXd m = as_eigen(c);
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSymmetryTolerance) {
        throw ContractViolation("top_r_eigvecs input asymmetric by " + std::to_string(asym));
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
    if (es.info() != Eigen::Success) {
        throw Error("eigendecomposition failed to converge");
    }
    // Eigen orders ascending; we want the r largest, descending.
    TopEigvecsResult out;
    Eigen::MatrixXd basis(n, r);
    out.eigenvalues.resize(r);
    for (int j = 0; j < r; ++j) {
        basis.col(j) = es.eigenvectors().col(n - 1 - j);
        out.eigenvalues[j] = es.eigenvalues()(n - 1 - j);
    }
    if (r < n) {
        const double lambda1 = std::abs(es.eigenvalues()(n - 1));
        const double gap = es.eigenvalues()(n - r) - es.eigenvalues()(n - r - 1);
        out.degenerate_gap = gap <= kGapTolerance * lambda1;
    }
    out.basis = SubspaceEstimate(from_eigen(basis));
    return out;
}

double coherence(const DenseMatrix& v) {
    const int m = v.rows();
    const int r = v.cols();
    if (r < 1 || m < r) throw ContractViolation("coherence needs an M x r matrix, M >= r >= 1");
    const double defect = orthonormality_defect(v);
    if (defect > 1e-8) {
        throw ContractViolation("coherence input not orthonormal: defect " +
                                std::to_string(defect));
    }
    double max_row = 0.0;
    for (int i = 0; i < m; ++i) {
        double s = 0.0;
        for (int j = 0; j < r; ++j) s += v(i, j) * v(i, j);
        max_row = std::max(max_row, s);
    }
    return max_row * static_cast<double>(m) / static_cast<double>(r);
}

DenseMatrix row_restrict(const DenseMatrix& x, const IndexSet& s) {
    if (s.universe() != x.rows()) {
        throw ContractViolation("index set universe does not match row count");
    }
    DenseMatrix out(s.size(), x.cols());
    for (int i = 0; i < s.size(); ++i) {
        for (int j = 0; j < x.cols(); ++j) out(i, j) = x(s[i], j);
    }
    return out;
}

std::vector<double> singular_values(const DenseMatrix& a) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(as_eigen(a)));
    std::vector<double> out(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
    return out;
}

double sigma_min(const DenseMatrix& a) {
    // sigma_r in the thin sense: 0 when there are fewer rows than columns.
    if (a.rows() < a.cols()) return 0.0;
    const auto sv = singular_values(a);
    return sv.empty() ? 0.0 : sv.back();
}

double operator_norm(const DenseMatrix& a) {
    const auto sv = singular_values(a);
    return sv.empty() ? 0.0 : sv.front();
}

double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

double orthonormality_defect(const DenseMatrix& basis) {
    const Eigen::MatrixXd b = as_eigen(basis);
    const Eigen::MatrixXd g = b.transpose() * b;
    return (g - Eigen::MatrixXd::Identity(b.cols(), b.cols())).cwiseAbs().maxCoeff();
}

}  // namespace colrec
