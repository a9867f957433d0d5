#ifndef COLREC_EVALUATION_HPP
#define COLREC_EVALUATION_HPP

#include <string>

#include "colrec/types.hpp"

namespace colrec {

/// One experiment measurement row.
struct MetricsRecord {
    std::string method;
    int replication = 0;
    int t = 0;  // columns seen when the measurement was taken
    double sin_theta = 0.0;
    double rel_error = 0.0;
    double wall_seconds = 0.0;
};

/// Sine of the largest principal angle between two equal-rank subspaces:
/// the operator norm of (I - X X^T) U.
double sin_theta(const SubspaceEstimate& x, const SubspaceEstimate& u);

/// Fills the unobserved entries of Y by the per-column ridge fit onto
/// x_hat's span; observed entries are copied verbatim. With lambda == 0 a
/// column whose observed design is rank deficient raises SingularDesign.
DenseMatrix impute(const SubspaceEstimate& x_hat, const PartialMatrix& y, double lambda);

/// || P(Y_hat - Y_ref) ||_F / || P(Y_ref) ||_F over the evaluation mask
/// carried by y_ref. Throws when the denominator vanishes.
double rel_error_masked(const DenseMatrix& y_hat, const PartialMatrix& y_ref);

}  // namespace colrec

#endif
