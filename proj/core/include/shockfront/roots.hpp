#ifndef SHOCKFRONT_ROOTS_HPP
#define SHOCKFRONT_ROOTS_HPP

#include <cmath>
#include <utility>

#include "shockfront/errors.hpp"

namespace shockfront {

// Bracketed scalar root finding: bisection with a safeguarded secant step.
// Requires f(a) and f(b) of opposite sign (or zero).  Converges to |b-a| <= xtol.
template <class F>
double solve_bracketed(F&& f, double a, double b, double fa, double fb, double xtol,
                       int max_iter = 200) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        throw BracketError("solve_bracketed: endpoints do not bracket a root");
    }
    // Alternate secant and bisection candidates so the bracket width is
    // guaranteed to halve at least every other iteration.
    bool use_secant = true;
    for (int it = 0; it < max_iter && std::abs(b - a) > xtol; ++it) {
        double x = 0.5 * (a + b);
        if (use_secant) {
            const double denom = fb - fa;
            if (denom != 0.0) {
                const double s = b - fb * (b - a) / denom;
                const double lo = std::min(a, b), hi = std::max(a, b);
                const double guard = 1e-3 * (hi - lo);
                if (s > lo + guard && s < hi - guard) {
                    x = s;
                }
            }
        }
        use_secant = !use_secant;
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    return 0.5 * (a + b);
}

template <class F>
double solve_bracketed(F&& f, double a, double b, double xtol, int max_iter = 200) {
    const double fa = f(a);
    const double fb = f(b);
    return solve_bracketed(std::forward<F>(f), a, b, fa, fb, xtol, max_iter);
}

// Golden-section maximization of a unimodal function on [a, b] to |b-a| <= xtol.
template <class F>
double golden_section_max(F&& f, double a, double b, double xtol, int max_iter = 300) {
    constexpr double invphi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace shockfront

#endif
