#pragma once

#include "gi/core.hpp"

namespace gi {

// Traditional correlation ghost imaging baseline:
//
//   G(i,j) = (1/M) * sum_m (B_m - <B>) * (I_m(i,j) - <I(i,j)>)
//
// min-max normalized to [0,1]. Requires M >= 2.
Image reconstruct_cgi(const PatternStack& patterns, const MeasurementVector& y);

} // namespace gi
