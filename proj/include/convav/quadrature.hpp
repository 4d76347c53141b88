// Breakpoint-aware adaptive quadrature.
//
// The integrands of this library are piecewise smooth: convolution kernels
// have kinks at w = n/lambda, weights have support endpoints, and the
// explicit-formula integrands carry w^alpha oscillation plus an integrable
// (b-w)^q endpoint singularity for Cesaro weights.  Panels are aligned with
// the supplied breakpoints, each panel is integrated with fixed-order
// Gauss-Legendre (order 8) and refined by bisection until two successive
// estimates agree within tol/10.  Panels adjacent to a flagged endpoint
// power are subdivided geometrically toward the endpoint and the final
// sliver is added in closed form by freezing the smooth factor.

#ifndef CONVAV_QUADRATURE_HPP
#define CONVAV_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace convav {

struct QuadOptions {
    double rel_tol = 1e-11;
    double abs_tol = 1e-300;  // pure relative control unless the caller sets it
    int max_depth = 32;
    // Integrand ~ C (w-a)^p near the left endpoint (Re p > -1), and likewise
    // at the right endpoint.  Triggers graded subdivision plus analytic tail.
    std::optional<std::complex<double>> left_power;
    std::optional<std::complex<double>> right_power;
    // If true, a panel that exhausts max_depth while disagreeing beyond its
    // share of the tolerance raises numeric_failure; otherwise the
    // disagreement just inflates the error estimate.
    bool throw_on_failure = true;
};

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double err_estimate = 0.0;
    long panels = 0;  // accepted leaf panels
};

// Integrate f over [a, b].  breakpoints are merged, deduplicated and clipped
// to (a, b); the integrand is assumed smooth strictly inside each panel.
QuadResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                     const std::vector<double>& breakpoints, const QuadOptions& opt = {});

// Real-valued convenience wrapper.
struct QuadResultReal {
    double value = 0.0;
    double err_estimate = 0.0;
    long panels = 0;
};
QuadResultReal integrate_real(const std::function<double(double)>& f, double a, double b,
                              const std::vector<double>& breakpoints, const QuadOptions& opt = {});

// Breakpoints at every multiple of 1/lambda inside (a, b): the kink set of
// x -> K(lambda x) for an integer-breakpoint kernel K.
std::vector<double> kernel_breakpoints(double lambda, double a, double b);

// Log-spaced split points resolving the oscillation of w^{i gamma} on
// [a, b] (phase gamma*log w), roughly 3 radians of phase per panel.
std::vector<double> oscillation_breakpoints_log(double gamma_abs, double a, double b);

// Split points resolving sin(2 pi n (lambda w)^{1/ell}) on [a, b].
std::vector<double> oscillation_breakpoints_root(double n, double lambda, int ell, double a,
                                                 double b);

}  // namespace convav

#endif
