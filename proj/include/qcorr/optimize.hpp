#pragma once

#include <functional>
#include <vector>

namespace qcorr {

// Golden-section maximization of f on [lo, hi]; returns (argmax, max).
// tol is the bracket width at which the search stops.
std::pair<double, double> golden_section_max(const std::function<double(double)>& f, double lo,
                                             double hi, double tol = 1e-10);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
};

// Standard Nelder-Mead MINIMIZATION (reflection 1, expansion 2,
// contraction 1/2, shrink 1/2). Starts from x0 with per-coordinate step
// `scale`; stops when the simplex diameter drops below diameter_tol or
// after max_iter iterations. Deterministic.
NelderMeadResult nelder_mead_min(const std::function<double(const std::vector<double>&)>& f,
                                 const std::vector<double>& x0, double scale,
                                 double diameter_tol = 1e-7, int max_iter = 2000);

}  // namespace qcorr
