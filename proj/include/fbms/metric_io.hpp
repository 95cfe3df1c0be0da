#pragma once
#include <string>

#include "fbms/warp.hpp"

namespace fbms {

// A metric is either a preset name (euclidean, sphere, gaussian-shrinker)
// or the path to a plain-text config:
//   kind = warp        (or: kind = conformal)
//   r,h                (or: s,rho)
//   0,0
//   0.1,0.0998
//   ...
// Tabulated values are interpolated with a twice-differentiable spline.
WarpProfile load_metric(const std::string& spec);

}  // namespace fbms
