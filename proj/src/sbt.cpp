#include "infodens/sbt.hpp"
#include "infodens/bessel.hpp"
#include "infodens/errors.hpp"

#include <cmath>
#include <numbers>

namespace infodens {

std::vector<RadialFunction> sbt_batch(const std::vector<const RadialFunction*>& Rs,
                                      int l, const RadialGrid& k_grid) {
    if (Rs.empty()) return {};
    const RadialGrid& rg = Rs.front()->grid;
    for (const auto* R : Rs) {
        if (R->grid != rg || R->values.size() != rg.n_points)
            throw input_error("numerics", "sbt",
                              "batch members must share one grid");
        if (std::abs(R->values.back()) > 1e-8)
            throw solver_error("numerics", "sbt",
                               "function has not decayed at r_max (tail " +
                                   std::to_string(R->values.back()) +
                                   "); enlarge r_max");
    }
    const std::size_t n = rg.n_points;
    // Combined weight for ∫f r²dr as a dot product over the nodes: Simpson
    // weights on the (n+1)-point sample including the origin, whose f(0)·0²
    // term vanishes.
    const std::vector<double> sw = simpson_weights(n + 1, rg.h);
    std::vector<double> wr2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = rg.node(i);
        wr2[i] = sw[i + 1] * r * r;
    }

    const double pref = std::sqrt(2.0 / std::numbers::pi);
    std::vector<RadialFunction> out(Rs.size());
    for (auto& o : out)
        o = RadialFunction{k_grid, std::vector<double>(k_grid.n_points)};

    std::vector<double> jl(n);
    for (std::size_t ik = 0; ik < k_grid.n_points; ++ik) {
        const double k = k_grid.node(ik);
        for (std::size_t i = 0; i < n; ++i)
            jl[i] = sph_bessel_jl(l, k * rg.node(i));
        for (std::size_t f = 0; f < Rs.size(); ++f) {
            const auto& v = Rs[f]->values;
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += wr2[i] * jl[i] * v[i];
            out[f].values[ik] = pref * s;
        }
    }
    return out;
}

RadialFunction sbt(const RadialFunction& R, int l, const RadialGrid& k_grid) {
    return std::move(sbt_batch({&R}, l, k_grid).front());
}

double parseval_defect(const RadialFunction& R, const RadialFunction& Rk) {
    RadialFunction r2{R.grid, R.values};
    for (auto& v : r2.values) v *= v;
    RadialFunction k2{Rk.grid, Rk.values};
    for (auto& v : k2.values) v *= v;
    const double nr = integrate_radial(r2, Weight::r_squared);
    const double nk = integrate_radial(k2, Weight::r_squared);
    return std::abs(nr - nk) / nr;
}

} // namespace infodens
