#include "qcorr/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcorr {

std::pair<double, double> golden_section_max(const std::function<double(double)>& f, double lo,
                                             double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

namespace {

double simplex_diameter(const std::vector<std::vector<double>>& pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < pts[i].size(); ++k) {
                const double diff = pts[i][k] - pts[j][k];
                s += diff * diff;
            }
            d = std::max(d, std::sqrt(s));
        }
    return d;
}

}  // namespace

NelderMeadResult nelder_mead_min(const std::function<double(const std::vector<double>&)>& f,
                                 const std::vector<double>& x0, double scale, double diameter_tol,
                                 int max_iter) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += scale;

    std::vector<double> fv(n + 1);
    int evals = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        fv[i] = f(pts[i]);
        ++evals;
    }

    std::vector<std::size_t> order(n + 1);
    for (int iter = 0; iter < max_iter; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });

        if (simplex_diameter(pts) < diameter_tol) break;

        const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coeff) {
            std::vector<double> x(n);
            for (std::size_t k = 0; k < n; ++k)
                x[k] = centroid[k] + coeff * (pts[worst][k] - centroid[k]);
            return x;
        };

        const auto reflected = blend(-1.0);
        const double fr = f(reflected);
        ++evals;

        if (fr < fv[best]) {
            const auto expanded = blend(-2.0);
            const double fe = f(expanded);
            ++evals;
            if (fe < fr) {
                pts[worst] = expanded;
                fv[worst] = fe;
            } else {
                pts[worst] = reflected;
                fv[worst] = fr;
            }
        } else if (fr < fv[second_worst]) {
            pts[worst] = reflected;
            fv[worst] = fr;
        } else {
            const auto contracted = blend(fr < fv[worst] ? -0.5 : 0.5);
            const double fc = f(contracted);
            ++evals;
            if (fc < std::min(fr, fv[worst])) {
                pts[worst] = contracted;
                fv[worst] = fc;
            } else {
                // Shrink toward the best point.
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < n; ++k)
                        pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
                    fv[i] = f(pts[i]);
                    ++evals;
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    return {pts[best], fv[best], evals};
}

}  // namespace qcorr
