#pragma once

#include <cmath>
#include <complex>

namespace qwre {

namespace detail {

template <typename F, typename V>
V adaptive_simpson_rec(const F& f, double a, double b, V fa, V fm, V fb, V whole, double eps,
                       int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const V flm = f(lm);
    const V frm = f(rm);
    const V left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const V right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const V delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of a smooth (real or complex) integrand.
template <typename F>
auto integrate(const F& f, double a, double b, double eps = 1e-12, int max_depth = 48) {
    using V = decltype(f(a));
    if (a == b) return V{};
    const V fa = f(a);
    const V fb = f(b);
    const V fm = f(0.5 * (a + b));
    const V whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, eps, max_depth);
}

}  // namespace qwre
