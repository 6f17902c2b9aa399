#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace epsw {

using Complex = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic reduction: result independent of how cell evaluation is chunked.
inline double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline double pairwise_sum(const std::vector<double>& v) {
    return v.empty() ? 0.0 : pairwise_sum(v, 0, v.size());
}

// 5-point Richardson central difference, error O(h^4).
inline double richardson_diff(const std::function<double(double)>& f, double x, double h) {
    return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2 * h) - f(x - 2 * h))) / (12.0 * h);
}

// Bracketed scalar root via bisection/secant hybrid.
inline double find_root(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-14, int maxit = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw Error("find_root: no sign change in bracket");
    for (int it = 0; it < maxit; ++it) {
        double m = 0.5 * (a + b);
        // secant candidate, clipped to the bracket
        double s = (std::abs(fb - fa) > 1e-300) ? (a - fa * (b - a) / (fb - fa)) : m;
        if (!(s > std::min(a, b) && s < std::max(a, b))) s = m;
        double fs = f(s);
        if (std::abs(fs) == 0.0 || std::abs(b - a) < tol) return s;
        if (fa * fs < 0.0) { b = s; fb = fs; }
        else               { a = s; fa = fs; }
    }
    return 0.5 * (a + b);
}

// C^7 polynomial smoothstep: 1 at x<=0, 0 at x>=1.
inline double cutoff_step(double x) {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    double s = 0.0;
    // smootherstep family, N=7 (degree 15), falling variant
    static const double c[] = {6435.0, -40040.0, 108108.0, -163800.0,
                               150150.0, -83160.0, 25740.0, -3432.0};
    double xp = std::pow(x, 8);
    double acc = 0.0, xk = 1.0;
    for (int k = 0; k < 8; ++k) { acc += c[k] * xk; xk *= x; }
    s = xp * acc;
    return 1.0 - s;
}

}  // namespace epsw
