#include "convav/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "convav/errors.hpp"
#include "convav/kahan.hpp"

namespace convav {

namespace {

// Gauss-Legendre order 8 on [-1, 1].
constexpr double kGlNode[4] = {0.18343464249564980, 0.52553240991632899, 0.79666647741362674,
                               0.96028985649753623};
constexpr double kGlWeight[4] = {0.36268378337836198, 0.31370664587788729, 0.22238103445337447,
                                 0.10122853629037626};

using Cplx = std::complex<double>;
using Fn = std::function<Cplx(double)>;

Cplx gl8(const Fn& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    KahanSum<Cplx> acc;
    for (int i = 0; i < 4; ++i) {
        const double d = half * kGlNode[i];
        acc.add(kGlWeight[i] * (f(mid - d) + f(mid + d)));
    }
    return half * acc.value();
}

struct AdaptState {
    const Fn& f;
    double panel_tol;
    int max_depth;
    long leaves = 0;
    long leaf_budget = 2'000'000;
    double worst_disagreement = 0.0;
    bool budget_exhausted = false;
    KahanSum<Cplx> total;
    KahanSum<double> err;
};

// Depth-first, left-to-right bisection: accept a panel once two successive
// estimates agree within the per-panel tolerance.  Deterministic by
// construction; accumulation order is fixed.
void adapt(AdaptState& st, double lo, double hi, Cplx whole, int depth) {
    const double mid = 0.5 * (lo + hi);
    const Cplx left = gl8(st.f, lo, mid);
    const Cplx right = gl8(st.f, mid, hi);
    const Cplx refined = left + right;
    const double disagreement = std::abs(refined - whole);
    if (disagreement <= st.panel_tol || depth >= st.max_depth || st.leaves > st.leaf_budget) {
        if (st.leaves > st.leaf_budget) st.budget_exhausted = true;
        if (disagreement > st.panel_tol)
            st.worst_disagreement = std::max(st.worst_disagreement, disagreement);
        st.total.add(refined);
        st.err.add(disagreement);
        st.leaves += 2;
        return;
    }
    adapt(st, lo, mid, left, depth + 1);
    adapt(st, mid, hi, right, depth + 1);
}

}  // namespace

std::vector<double> kernel_breakpoints(double lambda, double a, double b) {
    std::vector<double> bps;
    if (lambda <= 0.0 || !(b > a)) return bps;
    const double lo = std::floor(a * lambda) + 1.0;
    const double hi = std::ceil(b * lambda) - 1.0;
    for (double j = lo; j <= hi; j += 1.0) {
        const double w = j / lambda;
        if (w > a && w < b) bps.push_back(w);
    }
    return bps;
}

std::vector<double> oscillation_breakpoints_log(double gamma_abs, double a, double b) {
    std::vector<double> bps;
    if (gamma_abs < 1.0 || a <= 0.0 || !(b > a)) return bps;
    const double step = 3.0 / gamma_abs;  // ~3 radians of phase per panel
    for (double lw = std::log(a) + step; lw < std::log(b); lw += step)
        bps.push_back(std::exp(lw));
    return bps;
}

std::vector<double> oscillation_breakpoints_root(double n, double lambda, int ell, double a,
                                                 double b) {
    std::vector<double> bps;
    if (!(b > a) || n < 1.0) return bps;
    const double c = 2.0 * M_PI * n * std::pow(lambda, 1.0 / ell);
    const double th_a = c * std::pow(std::max(a, 0.0), 1.0 / ell);
    const double th_b = c * std::pow(b, 1.0 / ell);
    for (double th = th_a + 3.0; th < th_b; th += 3.0) {
        const double w = std::pow(th / c, static_cast<double>(ell));
        if (w > a && w < b) bps.push_back(w);
    }
    return bps;
}

QuadResult integrate(const Fn& f, double a, double b, const std::vector<double>& breakpoints,
                     const QuadOptions& opt) {
    if (!(b >= a)) throw invalid_argument("integrate: b < a");
    QuadResult res;
    if (b == a) return res;

    std::vector<double> edges;
    edges.push_back(a);
    for (double w : breakpoints)
        if (w > a && w < b) edges.push_back(w);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    const double min_gap = 1e-14 * (b - a);
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [min_gap](double x, double y) { return y - x < min_gap; }),
                edges.end());
    if (edges.back() != b) edges.back() = b;

    // Magnitude scale from a rough pass over the base panels; the relative
    // tolerance and the endpoint-tail cutoff are both anchored to it.
    double scale0 = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        scale0 += std::abs(gl8(f, edges[i], edges[i + 1]));
    const double tail_tol = 0.01 * std::max(opt.abs_tol, opt.rel_tol * std::max(scale0, 1e-300));

    // Graded geometric subdivision toward a flagged endpoint power q: the
    // integrand behaves like C (dist)^q there, so halving panels keep GL8
    // accurate on each, and the innermost sliver is added in closed form by
    // freezing the smooth factor:  tail = f(edge) * delta / (q+1).
    Cplx tail_sum = 0.0;
    double tail_err = 0.0;
    // Panels narrower than ~1e-13 of the span would sit on a handful of
    // representable points near the endpoint; stop there and let the frozen
    // tail cover the sliver (its freeze error scales with the sliver width).
    const double delta_floor = 1e-13 * (b - a);
    auto grade = [&](bool right_side, const Cplx& power) {
        if (power.real() <= -1.0 + 1e-12)
            throw invalid_argument("integrate: endpoint power must have Re > -1");
        const double inner = right_side ? edges[edges.size() - 2] : edges[1];
        const double endpoint = right_side ? b : a;
        double delta = std::abs(endpoint - inner);
        if (delta <= 0.0) return;
        std::vector<double> sub;
        Cplx tail = 0.0;
        for (int i = 0; i < 512; ++i) {
            delta *= 0.5;
            const double edge = right_side ? endpoint - delta : endpoint + delta;
            if (edge == endpoint) break;
            sub.push_back(edge);
            tail = f(edge) * delta / (power + 1.0);
            if (std::abs(tail) < tail_tol || delta <= delta_floor) break;
        }
        if (sub.empty()) return;
        tail_sum += tail;
        tail_err += std::abs(tail) * std::min(1.0, 100.0 * delta / (b - a));
        if (right_side) {
            edges.pop_back();  // the sliver [b - delta, b] is covered by the tail
            edges.insert(edges.end(), sub.begin(), sub.end());
        } else {
            std::sort(sub.begin(), sub.end());
            edges.erase(edges.begin());
            edges.insert(edges.begin(), sub.begin(), sub.end());
        }
    };
    if (opt.right_power) grade(true, *opt.right_power);
    if (opt.left_power) grade(false, *opt.left_power);

    // Final rough pass over the (possibly graded) panel set.
    const std::size_t npanels = edges.size() - 1;
    std::vector<Cplx> rough(npanels);
    double scale = std::abs(tail_sum);
    for (std::size_t i = 0; i < npanels; ++i) {
        rough[i] = gl8(f, edges[i], edges[i + 1]);
        scale += std::abs(rough[i]);
    }
    const double tol_total = std::max(opt.abs_tol, opt.rel_tol * scale);
    // Per-panel share with the agree-within-tol/10 refinement rule, floored
    // near roundoff so dense pre-splits cannot demand sub-epsilon agreement.
    const double panel_tol =
        std::max(tol_total / (10.0 * static_cast<double>(npanels)), 4e-16 * scale + 1e-305);

    AdaptState st{f, panel_tol, opt.max_depth, 0, 2'000'000, 0.0, false, {}, {}};
    for (std::size_t i = 0; i < npanels; ++i) adapt(st, edges[i], edges[i + 1], rough[i], 0);

    res.value = st.total.value() + tail_sum;
    res.err_estimate = st.err.value() + tail_err;
    res.panels = st.leaves;

    if (opt.throw_on_failure &&
        (st.budget_exhausted || st.worst_disagreement > 10.0 * panel_tol)) {
        std::ostringstream msg;
        msg << "quadrature did not converge: worst panel disagreement " << st.worst_disagreement
            << " vs per-panel tolerance " << panel_tol << ", " << st.leaves << " panels"
            << (st.budget_exhausted ? ", panel budget exhausted" : "");
        throw numeric_failure(msg.str());
    }
    return res;
}

QuadResultReal integrate_real(const std::function<double(double)>& f, double a, double b,
                              const std::vector<double>& breakpoints, const QuadOptions& opt) {
    const QuadResult r =
        integrate([&f](double w) { return Cplx(f(w), 0.0); }, a, b, breakpoints, opt);
    return {r.value.real(), r.err_estimate, r.panels};
}

}  // namespace convav
