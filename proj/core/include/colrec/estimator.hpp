#ifndef COLREC_ESTIMATOR_HPP
#define COLREC_ESTIMATOR_HPP

#include <cstdint>

#include "colrec/linalg.hpp"
#include "colrec/rng.hpp"
#include "colrec/sampling.hpp"
#include "colrec/types.hpp"

namespace colrec {

enum class ScaledPcaVariant {
    /// Off-diagonal rescale N^2 / (k(k-1)), the subroutine's literal factor.
    kLiteral,
    /// Off-diagonal rescale N(N-1) / (k(k-1)), the exact without-replacement
    /// unbiased factor.
    kExactUnbiased,
};

struct EstimatorConfig {
    int r = 1;
    SamplingBudget budget;
    int m_init = 0;       // columns consumed by spectral initialization
    int block_size = 0;   // M
    int num_blocks = 0;   // s
    // Second phase of the double-block schedule; unused by the single run.
    int block_size_2 = 0;  // M2
    int num_blocks_2 = 0;  // s2
    double epsilon = 0.1;
    bool active = false;
    ActiveMode active_mode = ActiveMode::kGreedy;
    double c_med = 1.0;                  // L = max(1, ceil(c_med * ceil(log M)))
    double mu_target_coefficient = 10.0; // coherence target = coeff * log M
    double sigma_r_hint = 1.0;           // stands in for sigma_r of the true factor
    double ridge_lambda = 0.05;
    bool practical_mode = false;  // L = 1, plain QR, ridge instead of hard errors
    bool allow_s2_overlap = false;  // draw S2 from all of [N] instead of [N] \ S1
    ScaledPcaVariant scaled_pca_variant = ScaledPcaVariant::kLiteral;
    int refresh_every = 1;  // streaming: re-orthonormalize after this many columns
    std::uint64_t base_seed = 0;

    void validate() const;
    /// Median-of-estimates fan-out for block size m (1 in practical mode).
    int median_repeats(int m) const;
};

/// Spectral baseline: forms C = P(Y) P(Y)^T from columns holding exactly k
/// observed entries each, rescales off-diagonal and diagonal entries
/// (off-diagonal by N^2/(k(k-1)) or N(N-1)/(k(k-1)) per `variant`, diagonal
/// by N/k), and returns the top-r eigenvectors.
SubspaceEstimate scaled_pca(const PartialMatrix& y, int k, int n, int r,
                            ScaledPcaVariant variant = ScaledPcaVariant::kLiteral);

/// The two rescale factors applied by scaled_pca.
struct ScaledPcaFactors {
    double off_diagonal;
    double diagonal;
};
ScaledPcaFactors scaled_pca_factors(int n, int k, ScaledPcaVariant variant);

/// Per-column least squares of Y's columns onto X_prev, using only the
/// entries in omega1. Row m of the result is the coefficient vector for
/// column m. With ridge_lambda == 0, a column whose design Gram matrix has
/// sigma_min <= 1e-10 raises SingularDesign carrying the column index.
DenseMatrix fit_w_block(const PartialMatrix& y, const SubspaceEstimate& x_prev,
                        const ObservationMask& omega1, double ridge_lambda = 0.0);

struct SmoothQrResult {
    SubspaceEstimate w_hat;
    DenseMatrix w_tilde;  // w0 + g_h
    DenseMatrix g_h;      // zero when no noise was needed
    int iterations = 0;   // noise rounds taken
    double final_sigma = 0.0;
    double final_coherence = 0.0;
};

/// Smooth orthonormalization: QR of W0 plus escalating Gaussian noise until
/// the Q factor's coherence drops to mu_target. Noise std per entry is
/// sigma/sqrt(M) with sigma starting at epsilon_prime * ||W0|| / M and
/// doubling; once sigma would exceed ||W0|| with coherence still above
/// target, CoherenceUnreachable is raised.
SmoothQrResult smooth_qr(const DenseMatrix& w0, double epsilon_prime,
                         double mu_target, RngStream& rng);

/// Per-row least squares of Y's rows onto W_hat over the entries in
/// omega2_sub (restricted to the block columns `col_begin` maps into W_hat's
/// rows). Row n of the result is the coefficient vector for row n.
DenseMatrix fit_x_block(const PartialMatrix& y, const DenseMatrix& w_hat,
                        const ObservationMask& omega2_sub, int col_begin,
                        double ridge_lambda = 0.0);

/// Entry-wise median across a stack of equally sized matrices.
DenseMatrix elementwise_median(const std::vector<DenseMatrix>& stack);

/// One alternating-minimization block update: fit W over L*M columns
/// starting at `col_begin`, smooth-orthonormalize it, fit X on each of the L
/// size-M sub-blocks, combine by entry-wise median, orthonormalize.
/// In practical mode L = 1, plain QR replaces the noise schedule, and both
/// fits use cfg.ridge_lambda.
SubspaceEstimate median_ls(const SubspaceEstimate& x_prev, const PartialMatrix& y,
                           const ObservationMask& omega1, const ObservationMask& omega2,
                           int block_size, int col_begin, double epsilon,
                           const EstimatorConfig& cfg, RngStream& smooth_rng);

struct EstimateResult {
    SubspaceEstimate estimate;
    ObservationMask mask;
};

/// Full pipeline: spectral initialization with uniform sampling of
/// k1+k2 entries per column over the first m_init columns, then
/// `num_blocks` median-LS blocks of L*M columns each, with per-column row
/// selection (active or uniform) for the W samples and uniform rows for the
/// X samples. Returns the final estimate and the union of everything
/// observed.
EstimateResult column_space_estimate(const PartialMatrix& y, const EstimatorConfig& cfg);

/// Same pipeline with two block phases: num_blocks at block_size, then
/// num_blocks_2 at block_size_2.
EstimateResult double_column_space_estimate(const PartialMatrix& y, const EstimatorConfig& cfg);

}  // namespace colrec

#endif
