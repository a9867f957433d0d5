#ifndef COLREC_STREAM_HPP
#define COLREC_STREAM_HPP

#include <optional>
#include <vector>

#include "colrec/estimator.hpp"

namespace colrec {

/// Online variant of the alternating-minimization iteration: columns arrive
/// one at a time, each gets k1+k2 observed entries, and the X estimate is
/// maintained through per-row normal-equation summaries (recursive least
/// squares, identical to the batch solution for the same data).
class StreamState {
public:
    /// `first_column` is the absolute id of the first streamed column
    /// (columns before it were consumed by initialization).
    StreamState(const EstimatorConfig& cfg, SubspaceEstimate initial,
                int first_column = 0);

    /// Row sets to observe for the next expected column. Active mode selects
    /// S1 by the greedy sweep on the current estimate; S2 is uniform over the
    /// complement (or over all rows with cfg.allow_s2_overlap). Must be
    /// called once before the matching observe().
    struct IndexPair {
        IndexSet s1;
        IndexSet s2;
    };
    IndexPair next_indices();

    /// Feeds the observed values for `column` at exactly the rows issued by
    /// the preceding next_indices() call (S1 then S2, concatenated in that
    /// order as `rows`). Updates the w fit, the per-row summaries, and
    /// (every cfg.refresh_every columns) the orthonormalized estimate.
    void observe(int column, const IndexSet& rows, const std::vector<double>& values);

    const SubspaceEstimate& estimate() const { return estimate_; }
    int columns_seen() const { return columns_seen_; }
    int next_column() const { return first_column_ + columns_seen_; }
    const ObservationMask& cumulative_mask() const { return mask_; }
    const EstimatorConfig& config() const { return cfg_; }

    /// Per-column w fits, in arrival order (one row per streamed column).
    DenseMatrix fitted_w() const;

    /// Current ridge solution of the per-row summaries, before
    /// orthonormalization. `ridge_lambda` overrides the config value when
    /// non-negative.
    DenseMatrix solved_x(double ridge_lambda = -1.0) const;

private:
    void refresh_estimate();

    EstimatorConfig cfg_;
    SubspaceEstimate estimate_;
    int first_column_;
    int columns_seen_ = 0;
    std::optional<IndexPair> pending_;
    std::vector<std::vector<double>> w_rows_;
    // Per-row Gram matrices (r x r, packed row-major) and right-hand sides.
    std::vector<std::vector<double>> gram_;
    std::vector<std::vector<double>> rhs_;
    ObservationMask mask_;
};

}  // namespace colrec

#endif
