#include "infodens/bessel.hpp"
#include "infodens/errors.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace infodens {

namespace {

// Power series j_l(x) = x^l / (2l+1)!! · (1 - x²/(2(2l+3)) + ...), good for
// x² well below 2l+3; we use it for x < 0.5 where four terms reach 1e-17.
double jl_series(int l, double x) {
    double dfact = 1.0; // (2l+1)!!
    for (int k = 1; k <= l; ++k) dfact *= 2.0 * k + 1.0;
    const double x2 = x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 8; ++k) {
        term *= -0.5 * x2 / (k * (2.0 * (l + k) + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::pow(x, l) / dfact * sum;
}

} // namespace

double sph_bessel_jl(int l, double x) {
    if (l < 0)
        throw input_error("numerics", "bessel", "order must be non-negative");
    if (x < 0.0)
        throw input_error("numerics", "bessel", "argument must be non-negative");
    if (x == 0.0) return l == 0 ? 1.0 : 0.0;
    if (l == 0) return std::sin(x) / x;
    if (x < 0.5) return jl_series(l, x);

    const double j0 = std::sin(x) / x;
    const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
    if (l == 1) return j1;

    if (x > static_cast<double>(l)) {
        // Upward j_{n+1} = (2n+1)/x · j_n - j_{n-1}: stable above the
        // turning point x ≈ l.
        double jm = j0, jn = j1;
        for (int n = 1; n < l; ++n) {
            const double jp = (2.0 * n + 1.0) / x * jn - jm;
            jm = jn;
            jn = jp;
        }
        return jn;
    }

    // Downward Miller recurrence from a start order well above l; the
    // dominant solution decays downward so the seed choice washes out.
    // Normalize against j_0 at the end.
    const int n_start = l + 16 + static_cast<int>(2.0 * std::sqrt(static_cast<double>(l)));
    double fp = 0.0, fn = 1e-30;
    double fl = 0.0;
    const double rescale_at = 1e250, rescale_by = 1e-250;
    for (int n = n_start; n >= 1; --n) {
        double fm = (2.0 * n + 1.0) / x * fn - fp;
        fp = fn;
        fn = fm;
        if (n - 1 == l) fl = fn;
        if (std::abs(fn) > rescale_at) {
            fn *= rescale_by;
            fp *= rescale_by;
            fl *= rescale_by;
        }
    }
    return fl * (j0 / fn);
}

} // namespace infodens
