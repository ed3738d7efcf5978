#include "infodens/spectrum.hpp"
#include "infodens/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace infodens {

namespace {

// Discretization of -D u'' + W u = E u by the Numerov three-term recurrence
//   c_{i+1} u_{i+1} = (12 - 10 c_i) u_i - c_{i-1} u_{i-1},
//   c_i = 1 - (h²/12)(W_i - E)/D,
// which is algebraically identical to the generalized tridiagonal problem
// (-D·A + B∘W) u = E B u with Dirichlet ends u(0) = u(r_max) = 0.  Node
// counting on the outward sweep is the Sturm chain of that pencil, so the
// count equals the number of eigenvalues below E — provided every c_i in the
// swept range is positive.  Near the origin the centrifugal term makes
// c_i = 1 - l(l+1)/(12 i²) + O(h²) negative for l ≥ 3; those nodes carry
// eigenfunction amplitude ~(r/r_peak)^{l+1} < 1e-20, so the sweep simply
// starts past them (i_start below) — a Dirichlet wall whose spectral effect
// is far below every tolerance in play.

struct Channel {
    const std::vector<double>* W; // effective potential at nodes, size n
    double D = 0.0;
    double h = 0.0;
    std::size_t i_start = 0; // first sweep index (0-based node)
};

constexpr double c_margin = 0.05;
constexpr double rescale_at = 1e250;
constexpr double rescale_by = 1e-250;

double c_at(const Channel& ch, std::size_t i, double E) {
    const double w = ch.h * ch.h / 12.0;
    return 1.0 - w * ((*ch.W)[i] - E) / ch.D;
}

// First index from which c stays above the safety margin over the bound-state
// energy window.  The centrifugal barrier is E-independent, so evaluating at
// the window top (largest c) and bottom (smallest c) brackets all E.
std::size_t sweep_start(const std::vector<double>& W, double D, double h,
                        double E_lo, double E_hi) {
    Channel probe{&W, D, h, 0};
    const std::size_t n = W.size();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (c_at(probe, i, E_lo) <= c_margin || c_at(probe, i, E_hi) <= c_margin)
            start = i + 1;
    }
    if (start + 8 >= n)
        throw solver_error("spectrum", "solve",
                           "grid cannot resolve the centrifugal barrier "
                           "(step too coarse for this l)");
    return start;
}

// Outward Numerov sweep; returns the number of sign changes, i.e. the count
// of pencil eigenvalues below E.
int count_nodes(const Channel& ch, double E) {
    const std::size_t n = ch.W->size();
    double u_prev = 0.0, c_prev = 0.0; // Dirichlet ghost, term dropped
    double u_cur = 1e-3;
    double c_cur = c_at(ch, ch.i_start, E);
    int nodes = 0;
    for (std::size_t i = ch.i_start + 1; i < n; ++i) {
        const double c_next = c_at(ch, i, E);
        double u_next =
            ((12.0 - 10.0 * c_cur) * u_cur - c_prev * u_prev) / c_next;
        if (u_next * u_cur < 0.0) ++nodes;
        if (std::abs(u_next) > rescale_at) {
            u_next *= rescale_by;
            u_cur *= rescale_by;
        }
        u_prev = u_cur;
        c_prev = c_cur;
        u_cur = u_next;
        c_cur = c_next;
    }
    return nodes;
}

// Outermost classically allowed node, clamped so both matching neighbours
// stay inside the swept range.
std::size_t matching_index(const Channel& ch, double E) {
    const std::size_t n = ch.W->size();
    const std::size_t lo = ch.i_start + 2, hi = n - 4;
    std::size_t m = 0;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i)
        if ((*ch.W)[i] <= E) {
            m = i;
            found = true;
        }
    if (!found)
        m = static_cast<std::size_t>(
            std::min_element(ch.W->begin(), ch.W->end()) - ch.W->begin());
    return std::clamp(m, lo, hi);
}

// Sweeps for the final eigenfunction.  At a converged eigenvalue the growth
// from seed to turning point stays far below overflow (< 1e70 across the
// supported systems), so no mid-array rescaling is needed; assemble() checks
// finiteness after matching.
void sweep_out_to(const Channel& ch, double E, std::size_t m,
                  std::vector<double>& store) {
    double u_prev = 0.0, c_prev = 0.0;
    double u_cur = 1e-3;
    double c_cur = c_at(ch, ch.i_start, E);
    store[ch.i_start] = u_cur;
    for (std::size_t i = ch.i_start + 1; i <= m + 1; ++i) {
        const double c_next = c_at(ch, i, E);
        const double u_next =
            ((12.0 - 10.0 * c_cur) * u_cur - c_prev * u_prev) / c_next;
        u_prev = u_cur;
        c_prev = c_cur;
        u_cur = u_next;
        c_cur = c_next;
        store[i] = u_cur;
    }
}

void sweep_in_to(const Channel& ch, double E, std::size_t m,
                 std::vector<double>& store) {
    const std::size_t n = ch.W->size();
    double u_prev = 0.0, c_prev = 0.0; // boundary u(r_max) = 0
    double u_cur = 1e-3;               // node n-2
    double c_cur = c_at(ch, n - 2, E);
    store[n - 1] = 0.0;
    store[n - 2] = u_cur;
    for (std::size_t j = n - 2; j-- > m - 1;) { // j = n-3 .. m-1
        const double c_next = c_at(ch, j, E);
        const double u_next =
            ((12.0 - 10.0 * c_cur) * u_cur - c_prev * u_prev) / c_next;
        u_prev = u_cur;
        c_prev = c_cur;
        u_cur = u_next;
        c_cur = c_next;
        store[j] = u_cur;
    }
}

// Scale-free matching mismatch: the cross-Wronskian
//   w(E) = u_out(m+1)·u_in(m) - u_in(m+1)·u_out(m),
// which vanishes exactly when the two branches are proportional, i.e. at a
// discrete eigenvalue.  Needs u_out at (m, m+1) and u_in at (m, m+1); the
// inward sweep is run to m-1 and (m, m+1) read from its last two steps.
double mismatch(const Channel& ch, double E, std::size_t m) {
    // outward, tracking last two values
    double u_prev = 0.0, c_prev = 0.0;
    double u_cur = 1e-3;
    double c_cur = c_at(ch, ch.i_start, E);
    for (std::size_t i = ch.i_start + 1; i <= m + 1; ++i) {
        const double c_next = c_at(ch, i, E);
        double u_next =
            ((12.0 - 10.0 * c_cur) * u_cur - c_prev * u_prev) / c_next;
        if (std::abs(u_next) > rescale_at) {
            u_next *= rescale_by;
            u_cur *= rescale_by;
        }
        u_prev = u_cur;
        c_prev = c_cur;
        u_cur = u_next;
        c_cur = c_next;
    }
    const double out_m = u_prev, out_mp1 = u_cur;

    const std::size_t n = ch.W->size();
    double v_prev = 0.0, d_prev = 0.0;
    double v_cur = 1e-3;
    double d_cur = c_at(ch, n - 2, E);
    for (std::size_t j = n - 2; j-- > m;) { // down to node m
        const double d_next = c_at(ch, j, E);
        double v_next =
            ((12.0 - 10.0 * d_cur) * v_cur - d_prev * v_prev) / d_next;
        if (std::abs(v_next) > rescale_at) {
            v_next *= rescale_by;
            v_cur *= rescale_by;
        }
        v_prev = v_cur;
        d_prev = d_cur;
        v_cur = v_next;
        d_cur = d_next;
    }
    const double in_m = v_cur, in_mp1 = v_prev;

    const double scale_out = std::max(std::abs(out_m), std::abs(out_mp1));
    const double scale_in = std::max(std::abs(in_m), std::abs(in_mp1));
    if (scale_out == 0.0 || scale_in == 0.0) return 0.0;
    return (out_mp1 / scale_out) * (in_m / scale_in) -
           (in_mp1 / scale_in) * (out_m / scale_out);
}

Orbital assemble(const Channel& ch, const RadialGrid& grid, double E, int l,
                 int target_nodes) {
    const std::size_t n = ch.W->size();
    const std::size_t m = matching_index(ch, E);
    std::vector<double> out(n, 0.0), in(n, 0.0);
    sweep_out_to(ch, E, m, out);
    sweep_in_to(ch, E, m, in);
    if (in[m] == 0.0 || !std::isfinite(out[m] / in[m]))
        throw solver_error("spectrum", "solve",
                           "degenerate matching at l=" + std::to_string(l) +
                               " node target " + std::to_string(target_nodes));
    const double s = out[m] / in[m];
    std::vector<double> u(n, 0.0);
    for (std::size_t i = ch.i_start; i <= m; ++i) u[i] = out[i];
    for (std::size_t i = m + 1; i < n; ++i) u[i] = s * in[i];

    // normalize ∫u²dr = 1 on [0, r_max]; u(0) = 0 exactly
    Sampled1D sq{0.0, ch.h, std::vector<double>(n + 1)};
    sq.values[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) sq.values[i + 1] = u[i] * u[i];
    const double norm2 = integrate_1d(sq);
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
        throw solver_error("spectrum", "solve", "non-normalizable state");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& v : u) v *= inv;

    int nodes = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (u[i] * u[i + 1] < 0.0) ++nodes;
    if (nodes != target_nodes)
        throw solver_error("spectrum", "solve",
                           "node count " + std::to_string(nodes) +
                               " after refinement, expected " +
                               std::to_string(target_nodes) + " at l=" +
                               std::to_string(l));

    Orbital orb;
    orb.n_r = target_nodes;
    orb.l = l;
    orb.energy = E;
    orb.u = RadialFunction{grid, std::move(u)};
    return orb;
}

double locate_eigenvalue(const Channel& ch, int target, double a, double b,
                         double tol, int l) {
    // Phase 1: bisection on the node count until the bracket is tight.
    int iters = 0;
    while (b - a > tol) {
        if (++iters > 200)
            throw solver_error(
                "spectrum", "solve",
                "node-count bisection failed to converge for l=" +
                    std::to_string(l) + " node target " +
                    std::to_string(target));
        const double mid = 0.5 * (a + b);
        if (count_nodes(ch, mid) <= target)
            a = mid;
        else
            b = mid;
    }
    // Phase 2: secant (Illinois-damped false position) on the matching
    // mismatch inside the final bracket; skipped if no sign change is seen
    // (the bisection already meets the energy tolerance).
    const std::size_t m = matching_index(ch, 0.5 * (a + b));
    double wa = mismatch(ch, a, m), wb = mismatch(ch, b, m);
    if (wa * wb < 0.0) {
        int side = 0;
        for (int it = 0; it < 80; ++it) {
            const double width = b - a;
            if (width < 4.0 * std::numeric_limits<double>::epsilon() *
                            std::max(std::abs(a), std::abs(b)) +
                            1e-300)
                break;
            double mid = b - wb * width / (wb - wa);
            if (!std::isfinite(mid) || mid <= a || mid >= b)
                mid = 0.5 * (a + b);
            const double wm = mismatch(ch, mid, m);
            if (wa * wm <= 0.0) {
                b = mid;
                wb = wm;
                if (side == -1) wa *= 0.5; // Illinois: damp the stale end
                side = -1;
            } else {
                a = mid;
                wa = wm;
                if (side == +1) wb *= 0.5;
                side = +1;
            }
            if (wm == 0.0) break;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::vector<Orbital> solve_bound_states(const PotentialSpec& spec,
                                        std::size_t N, int l_max,
                                        int max_states_per_l,
                                        const RadialGrid& grid) {
    spec.validate();
    if (l_max < 0)
        throw input_error("spectrum", "solve", "l_max must be non-negative");
    if (max_states_per_l < 1)
        throw input_error("spectrum", "solve",
                          "max_states_per_l must be at least 1");
    if (grid.n_points < 16)
        throw input_error("spectrum", "solve", "grid too small");
    if (spec.kind != PotentialKind::harmonic) {
        // resolve the surface: a few Numerov steps per diffuseness length
        if (grid.h > spec.a / 5.0)
            throw input_error("spectrum", "solve",
                              "step " + std::to_string(grid.h) +
                                  " does not resolve the surface; need h <= "
                                  "a/5 = " +
                                  std::to_string(spec.a / 5.0));
        // keep the wall in the evanescent region: well radius plus several
        // diffuseness lengths must fit inside the box
        const double R = spec.r0 * std::cbrt(static_cast<double>(N));
        if (grid.r_max < R + 8.0 * spec.a)
            throw input_error("spectrum", "solve",
                              "box r_max = " + std::to_string(grid.r_max) +
                                  " too small for N = " + std::to_string(N) +
                                  " (need R + 8a = " +
                                  std::to_string(R + 8.0 * spec.a) +
                                  "); enlarge grid.r_max");
    }

    const bool harmonic = spec.kind == PotentialKind::harmonic;
    const double D = spec.hbar2_over_2m;
    const double scale = harmonic ? spec.omega : spec.V0;
    const std::size_t n = grid.n_points;

    std::vector<double> V(n);
    for (std::size_t i = 0; i < n; ++i) V[i] = potential_at(spec, N, grid.node(i));

    std::vector<Orbital> result;
    std::vector<double> W(n);
    for (int l = 0; l <= l_max; ++l) {
        const double ll = static_cast<double>(l) * (l + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double r = grid.node(i);
            W[i] = V[i] + D * ll / (r * r);
        }
        const double W_min = *std::min_element(W.begin(), W.end());
        if (!harmonic && W_min >= 0.0) continue; // barrier never dips below 0

        double E_lo = W_min - 1e-6 * scale;
        double E_hi;
        Channel ch{&W, D, grid.h, 0};
        if (harmonic) {
            // grow the window until it holds max_states_per_l levels, capped
            // below the boundary-dominated regime
            const double cap = 0.8 * W[n - 1];
            E_hi = W_min + 3.0 * spec.omega;
            ch.i_start = sweep_start(W, D, grid.h, E_lo, cap);
            while (count_nodes(ch, E_hi) < max_states_per_l && E_hi < cap)
                E_hi = std::min(cap, W_min + 2.0 * (E_hi - W_min));
        } else {
            E_hi = 0.0;
            ch.i_start = sweep_start(W, D, grid.h, E_lo, E_hi);
        }

        int guard = 0;
        while (count_nodes(ch, E_lo) > 0) {
            E_lo -= scale;
            if (++guard > 8)
                throw solver_error("spectrum", "solve",
                                   "cannot find a node-free lower bound at l=" +
                                       std::to_string(l));
        }

        const int n_states =
            std::min(count_nodes(ch, E_hi), max_states_per_l);
        const double tol = 2.5e-9 * scale;
        double lower = E_lo;
        for (int t = 0; t < n_states; ++t) {
            const double E = locate_eigenvalue(ch, t, lower, E_hi, tol, l);
            result.push_back(assemble(ch, grid, E, l, t));
            lower = E + tol; // count(lower) = t+1: valid floor for the next level
        }
    }

    std::sort(result.begin(), result.end(),
              [](const Orbital& x, const Orbital& y) {
                  if (x.energy != y.energy) return x.energy < y.energy;
                  if (x.l != y.l) return x.l < y.l;
                  return x.n_r < y.n_r;
              });
    return result;
}

} // namespace infodens
