// Complex Gamma via the Lanczos approximation (g = 7, 9 terms) with the
// reflection formula for Re z < 1/2.
//
// Every explicit-formula coefficient of the form
//   Gamma(rho_1) Gamma(rho_2) / Gamma(rho_1 + rho_2 + c)
// is assembled from log-Gamma differences: the individual factors underflow
// long before the ratio does (|Gamma(1/2 + i t)| ~ exp(-pi t / 2)).

#ifndef CONVAV_GAMMA_HPP
#define CONVAV_GAMMA_HPP

#include <complex>

namespace convav {

// log Gamma(z), up to an irrelevant multiple of 2 pi i in the imaginary
// part (all uses exponentiate it or exponentiate differences).
std::complex<double> clgamma(std::complex<double> z);

// Gamma(z); throws domain_error at the poles z = 0, -1, -2, ...
std::complex<double> cgamma(std::complex<double> z);

// exp(clgamma(a) + clgamma(b) - clgamma(c)): Gamma(a)Gamma(b)/Gamma(c)
// without intermediate under/overflow.
std::complex<double> gamma_ratio2(std::complex<double> a, std::complex<double> b,
                                  std::complex<double> c);

// exp(clgamma(a) - clgamma(c)): Gamma(a)/Gamma(c).
std::complex<double> gamma_ratio(std::complex<double> a, std::complex<double> c);

}  // namespace convav

#endif
