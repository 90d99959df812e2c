#pragma once

#include <functional>

namespace tdflow::detail {

/// Adaptive Simpson integration with absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 48);

}  // namespace tdflow::detail
