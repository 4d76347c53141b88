// Power-series and Dirichlet-series evaluations of the Goldbach counts.
//
//   sum_n R(n) e^{-n y}  vs  1/y^2 - 2 sum_rho y^{-rho-1} Gamma(rho)
//                            + ( sum_rho y^{-rho} Gamma(rho) )^2
//
//   Phi(s) = sum_n R(n)/n^s  =  s(s+1) int_1^inf u^{-s-2} (psi*psi)(u) du
//          = s(s+1)/(6(s-2))
//            - 2 sum_rho s(s+1)/(rho(rho+1)(rho+2)(s-rho-1))
//            + sum_{rho1,rho2} G(rho1)G(rho2) s(s+1)
//              / (G(rho1+rho2+2) (s-rho1-rho2))
//
// The integral route is summed exactly per unit interval: on [n, n+1] the
// convolution is affine in u, so u^{-s-2} (A u - B) integrates in closed
// form.  No quadrature error enters the Dirichlet check.

#ifndef CONVAV_SERIES_HPP
#define CONVAV_SERIES_HPP

#include <complex>
#include <vector>

#include "convav/arith.hpp"
#include "convav/report.hpp"
#include "convav/zeros.hpp"

namespace convav {

// rep_table: 1-based Goldbach counts R(1..N); lambda_seq: the von Mangoldt
// table used for the factorization cross-check (sum Lambda(n) e^{-ny})^2.
SeriesComparison goldbach_exp_series(double y, const std::vector<double>& rep_table,
                                     const ArithSeq& lambda_seq, const ZeroTable& zeros);

// Partial sum to N, integral route to U, meromorphic expansion over the
// zero table.  Sets near_pole if s is within 1e-6 of s = 2 or s = 1 + rho.
SeriesComparison dirichlet_phi(std::complex<double> s, const std::vector<double>& rep_table,
                               std::int64_t N, std::int64_t U, const ZeroTable& zeros);

struct RatioRow {
    double x = 0.0;
    double ratio_quadratic = 0.0;  // sum_{n<=x} R(n) / (x^2/2)
    double ratio_cubic = 0.0;      // (psi*psi)(x) / (x^3/6)
};

std::vector<RatioRow> asymptotic_ratio(const std::vector<double>& rep_table,
                                       const std::vector<double>& x_grid);

}  // namespace convav

#endif
