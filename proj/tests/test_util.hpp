#pragma once

#include <cmath>
#include <functional>

#include "gaugeflow/fields.hpp"

namespace testutil {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline gaugeflow::ScalarField make_field(
    const gaugeflow::Grid& g, const std::function<double(double, double)>& f) {
    gaugeflow::ScalarField out(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix)
            out(ix, iy) = f(g.x(ix), g.y(iy));
    return out;
}

inline gaugeflow::ScalarField sin2pix(const gaugeflow::Grid& g) {
    return make_field(g, [](double x, double) { return std::sin(kTwoPi * x); });
}

inline double max_abs_diff(const gaugeflow::ScalarField& a,
                           const gaugeflow::ScalarField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i)
        m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

// Least-squares slope of log(ys) against log(xs).
inline double loglog_slope(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace testutil
