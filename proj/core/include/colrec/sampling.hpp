#ifndef COLREC_SAMPLING_HPP
#define COLREC_SAMPLING_HPP

#include <cstdint>

#include "colrec/linalg.hpp"
#include "colrec/rng.hpp"
#include "colrec/types.hpp"

namespace colrec {

/// Per-column observation budget: k1 rows for the W-fitting samples,
/// k2 rows for the X-fitting samples, out of N rows total.
struct SamplingBudget {
    int k1 = 0;
    int k2 = 0;
    int n = 0;

    int total() const { return k1 + k2; }
    /// Validates k1 + k2 <= N, k2 >= 1, and (active mode) k1 >= r.
    void validate(int rank, bool active) const;
};

/// Subset-quality constants for a budget of k1 rows out of N at rank r.
/// q1 lower-bounds what exhaustive selection achieves (squared), q1_tilde
/// what the deterministic greedy sweep achieves (squared).
struct SubsetQuality {
    double q1 = 0.0;
    double q1_tilde = 0.0;
};

/// q1 = (k1-r+1) / (r(N-k1) + k1-r+1), q1_tilde = (k1-r+1) / (r(N-r+1)).
SubsetQuality subset_quality(int n, int r, int k1);

/// Uniformly random size-k subset of [0, N).
IndexSet uniform_subset(int n, int k, RngStream& rng);

/// Uniformly random size-k subset of [0, N) \ excluded.
IndexSet uniform_subset_excluding(int n, int k, const IndexSet& excluded, RngStream& rng);

enum class ActiveMode { kExhaustive, kGreedy };

/// Default cap on the number of subsets exhaustive search will enumerate.
constexpr std::uint64_t kDefaultSubsetCap = 1000000;

/// Chooses k1 rows of X to keep sigma_r of the selected submatrix large.
///
/// Exhaustive mode maximizes sigma_r(row_restrict(X, S)) over all size-k1
/// subsets (ties broken toward the lexicographically smallest index list) and
/// refuses to run past `subset_cap`. Greedy mode runs a deterministic
/// trace-potential removal sweep: starting from all N rows it repeatedly
/// deletes the row whose removal least increases tr((X_S^T X_S)^{-1}),
/// which for orthonormal X guarantees
/// sigma_r(row_restrict(X, S)) >= sqrt(q1_tilde).
IndexSet active_subset(const SubspaceEstimate& x, int k1,
                       ActiveMode mode = ActiveMode::kGreedy,
                       std::uint64_t subset_cap = kDefaultSubsetCap);

/// Greedy sweep on a raw full-column-rank matrix (rows need not be
/// orthonormal); used when sampling is restricted to a subset of rows.
IndexSet greedy_subset_rows(const DenseMatrix& x, int k1);

/// Worst-case smallest singular value over all size-k row subsets of X
/// (brute force; a test oracle, not a hot path). Respects `subset_cap`.
double sigma_star(const SubspaceEstimate& x, int k,
                  std::uint64_t subset_cap = kDefaultSubsetCap);

/// Number of size-k subsets of [0, n), saturating at `cap + 1`.
std::uint64_t subset_count_capped(int n, int k, std::uint64_t cap);

}  // namespace colrec

#endif
