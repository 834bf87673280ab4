#pragma once

#include "gi/guided_filter.hpp"
#include "gi/plir.hpp"

// Joint-iteration driver: alternate one regularized Landweber update with
// one guided-filter pass, feeding each filter output back as the next
// Landweber iterate and as the next guidance image. Both the whole image
// (q) and the global edge map (abar) fall out of the same loop.

namespace gi {

struct PlirConfig {
    double omega = 1.0;
    double rank_cutoff = 1e-10; // relative to the largest singular value
    bool clamp = true;
};

struct JigiConfig {
    int max_iterations = 50;
    double tolerance = 1e-4; // relative L2 change of q between iterations
    PlirConfig plir;
    GuidedFilterParams filter;

    void validate() const;
};

// Full joint iteration:
//   x_0 = 0
//   x_t = plir_step(x_{t-1}, y)
//   I_t = x_t for t == 1, else q_{t-1}
//   (q_t, a_t) = guided_filter(I_t, x_t)
//   next Landweber iterate := q_t
// Stops when ||q_t - q_{t-1}|| / max(||q_{t-1}||, 1e-12) < tolerance, at
// max_iterations, or when the change grew for 5 consecutive iterations
// (then the lowest-residual iterate is returned).
ReconstructionResult reconstruct_jigi(const PatternStack& patterns,
                                      const MeasurementVector& y,
                                      const JigiConfig& cfg);

// Ablation: the same loop without the filter stage; the edge map is
// computed once at the end from the final image (self-guided response).
ReconstructionResult reconstruct_plir_only(const PatternStack& patterns,
                                           const MeasurementVector& y,
                                           const JigiConfig& cfg);

} // namespace gi
