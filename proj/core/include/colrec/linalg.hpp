#ifndef COLREC_LINALG_HPP
#define COLREC_LINALG_HPP

#include "colrec/types.hpp"

namespace colrec {

struct ThinQrResult {
    SubspaceEstimate q;
    DenseMatrix r;  // r x r upper triangular, positive diagonal
};

/// Thin QR factorization of a full-column-rank N x r matrix (N >= r).
/// The R factor is normalized to a positive diagonal, making the
/// factorization unique. Throws RankDeficient when
/// sigma_r(A) <= 1e-12 * sigma_1(A).
ThinQrResult thin_qr(const DenseMatrix& a);

struct TopEigvecsResult {
    SubspaceEstimate basis;
    std::vector<double> eigenvalues;  // the r largest, descending
    /// Set when lambda_r - lambda_{r+1} <= 1e-12 * |lambda_1|; the spanned
    /// subspace is then not unique, but the returned basis is still valid.
    bool degenerate_gap = false;
};

/// Orthonormal basis of the invariant subspace of the r largest eigenvalues
/// of a symmetric matrix. Asymmetry beyond 1e-9 (max-abs) is rejected.
TopEigvecsResult top_r_eigvecs(const DenseMatrix& c, int r);

/// Coherence of an M x r matrix with orthonormal columns:
/// max_m (M/r) * ||e_m^T V||^2, in [1, M/r]. Orthonormality is checked to 1e-8.
double coherence(const DenseMatrix& v);

/// Rows of X selected by S, in the order S lists them.
DenseMatrix row_restrict(const DenseMatrix& x, const IndexSet& s);

/// Singular values of A, descending.
std::vector<double> singular_values(const DenseMatrix& a);

/// Smallest singular value of A (0 for a matrix with fewer rows than cols
/// only in the degenerate rank sense; computed from the full SVD).
double sigma_min(const DenseMatrix& a);

/// Largest singular value (operator norm).
double operator_norm(const DenseMatrix& a);

double frobenius_norm(const DenseMatrix& a);

/// Max-abs deviation of basis^T basis from the identity.
double orthonormality_defect(const DenseMatrix& basis);

}  // namespace colrec

#endif
