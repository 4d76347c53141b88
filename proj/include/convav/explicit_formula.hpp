// Truncated explicit formulas over nontrivial zeta zeros.
//
// Zero sums are truncated at the table size K and always run over conjugate
// pairs rho = 1/2 +- i gamma, so real inputs give outputs whose imaginary
// part is a pure roundoff diagnostic.  Double sums run over all four sign
// combinations of (gamma_1, gamma_2) as direct O(K^2) loops.
//
//   Z_lambda(w)  = sum_rho lambda^rho Gamma(rho) / Gamma(rho + w + 1)
//   M_G(x)       = x^3/6 - 2 sum_rho x^{rho+2}/(rho(rho+1)(rho+2))
//                  + sum_{rho1,rho2} x^{rho1+rho2+1} Gamma(rho1)Gamma(rho2)
//                                    / Gamma(rho1+rho2+2)
//
// Cesaro-weight terms (weight (1-w)^k/Gamma(k+1) on (0,1)):
//
//   M0 = lambda^2/Gamma(k+3)
//   M1 = sum_rho lambda^{rho+1} Gamma(rho)/Gamma(rho+k+2)
//   M2 = sum_{rho1,rho2} lambda^{rho1+rho2} Gamma(rho1)Gamma(rho2)
//                        / Gamma(rho1+rho2+k+1)
//
// and the residual E(lambda,k) measures the truncated expansion against the
// exact Cesaro sum of the representation counts.

#ifndef CONVAV_EXPLICIT_FORMULA_HPP
#define CONVAV_EXPLICIT_FORMULA_HPP

#include <complex>
#include <optional>
#include <vector>

#include "convav/arith.hpp"
#include "convav/report.hpp"
#include "convav/weight.hpp"
#include "convav/zeros.hpp"

namespace convav {

struct ZLambdaResult {
    std::complex<double> value{};
    double last_pair_magnitude = 0.0;  // truncation diagnostic
    // |Z|*|Gamma(w+1)| / (lambda^{|u|+1} + 2^{|u|} log(|w|+2)), u = Re w.
    // Reported as a diagnostic of the known growth envelope, never asserted.
    double growth_envelope_ratio = 0.0;
};

// Truncated Z_lambda(w); lambda >= 4.
ZLambdaResult z_lambda(double lambda, std::complex<double> w, const ZeroTable& zeros);

// Truncated M_G(x) for x > 4.  formula = "mgoldbach"; combined = m0 - 2 m1 + m2.
ExplicitTerms m_goldbach(double x, const ZeroTable& zeros);

// Cesaro-weight terms at order k (Re k > 0), lambda > 4.  If rep_table is
// given (1-based Goldbach counts covering lambda), the exact side
//   Sigma = lambda^{-k} C_k(lambda)
// is evaluated and residual = Sigma - (M0 - 2 M1 + M2).
ExplicitTerms cesaro_explicit(double lambda, std::complex<double> k, const ZeroTable& zeros,
                              const std::vector<double>* rep_table = nullptr);

// Interval of integration for the general-weight terms; b may be +inf for
// weights that decay (the quadrature truncates where the weight underflows).
struct WeightInterval {
    double a = 0.0;
    double b = 1.0;
};

// General-weight terms
//   M0 = lambda^2 int_I w f,  M1 = sum_rho (lambda^{rho+1}/rho) int_I w^rho f,
//   M2 = sum_{rho1,rho2} lambda^{rho1+rho2} G(rho1)G(rho2)/G(rho1+rho2)
//         int_I w^{rho1+rho2-1} f.
// For a Cesaro weight on [0,1] the integrals use the Beta closed form
// int_0^1 w^alpha (1-w)^k dw = Gamma(alpha+1)Gamma(k+1)/Gamma(alpha+k+2);
// otherwise breakpoint-aware quadrature.
ExplicitTerms general_weight_terms(const Weight& f, double lambda, WeightInterval I,
                                   const ZeroTable& zeros);

// Extra terms from the zeta'(0)/zeta(0) = log(2 pi) refinement:
//   -2 log(2pi) lambda int_I f   and   +2 log(2pi) sum_rho lambda^rho int_I w^{rho-1} f.
std::vector<std::pair<std::string, std::complex<double>>> extra_terms_zeta0(
    const Weight& f, double lambda, WeightInterval I, const ZeroTable& zeros);

// Expansion of (psi * R_ell)(x), x > 2:
//   m0 = ell^2 x^{2+1/ell} / (2 ell^2 + 3 ell + 1)
//   m1 = -(Gamma(1/ell)/ell) sum_rho x^{rho+1/ell+1} Gamma(rho)/Gamma(rho+2+1/ell)
//   m2 = -x^2/4 + x^{2+1/ell} * (oscillatory n-series truncated at n_max)
// combined = m0 + m1 + m2.  If exact_conv is given, residual = exact - combined.
// The -x^2/4 is the Fourier mean of the fractional part integrated against
// t; cross-checked numerically against the defining integral.
ExplicitTerms psi_rell_terms(double x, int ell, const ZeroTable& zeros, long n_max,
                             std::optional<double> exact_conv = std::nullopt);

// J(alpha; I) = int_I w^alpha f''(w) dw by breakpoint-aware quadrature.
std::complex<double> frak_I(std::complex<double> alpha, const Weight& f, WeightInterval I);

// Weighted prime/power average assembled from J(.; I) and the oscillatory
// S(lambda w) integrals, I = [2/lambda, b]; residual against the exact
// double sum with g1 = Lambda, g2 = r_ell when the sequences are supplied.
ExplicitTerms hl_corollary_eval(const Weight& f, double lambda, double b, int ell,
                                const ZeroTable& zeros, long n_max,
                                const ArithSeq* lambda_seq = nullptr,
                                const ArithSeq* rell_seq = nullptr);

}  // namespace convav

#endif
