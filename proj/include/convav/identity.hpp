// Weighted multiple sums over arithmetical functions and the
// convolution-integral right-hand sides they equal.
//
// Two-sequence form (weight f supported in [a, b], f(b-) = f'(b-) = 0):
//
//   sum_{la < n <= lb} g2(n) sum_{m <= lb - n} g1(m) f((n+m)/l)
//     = G2(la) int_a^b G1(l v - l a) f'(v) dv
//       + (1/l) int_a^b f''(w) [ int_{la}^{lw} G2(s) G1(lw - s) ds ] dw
//
// with l = lambda.  The inner convolution integral is evaluated exactly via
// the step-function closed form; the outer integrals use breakpoint-aware
// Gauss-Legendre.  The d-fold generalization integrates f^{(d)} against the
// nested convolution kernel:
//
//   (multiple sum) = ((-1)^d / l^{d-1}) int_0^b f^{(d)}(w) K_d(l w) dw.

#ifndef CONVAV_IDENTITY_HPP
#define CONVAV_IDENTITY_HPP

#include <vector>

#include "convav/arith.hpp"
#include "convav/report.hpp"
#include "convav/weight.hpp"

namespace convav {

// Exact double sum sum_{la < n <= lb} g2(n) sum_{m <= lb-n} g1(m) f((n+m)/lambda).
double weighted_sum_2(const ArithSeq& g1, const ArithSeq& g2, const Weight& f, double lambda,
                      double a, double b);

struct RhsResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long panels = 0;
};

// Right-hand side of the two-sequence identity.  Throws numeric_failure if
// the quadrature cannot reach its tolerance.
RhsResult rhs_prop22(const ArithSeq& g1, const ArithSeq& g2, const Weight& f, double lambda,
                     double a, double b, double tol = 1e-10);

// Compact a = 0 route: (1/lambda) int_0^b f''(w) (G1*G2)(lambda w) dw.
// Kept separate so the general path can be cross-checked against it.
RhsResult rhs_prop22_compact(const ArithSeq& g1, const ArithSeq& g2, const Weight& f,
                             double lambda, double b, double tol = 1e-10);

// d-fold nested sum computed as sum_n G(n) f(n/lambda) over the composition
// counts G = rep_counts(seqs).
double weighted_sum_d(const std::vector<const ArithSeq*>& seqs, const Weight& f, double lambda,
                      double b);

RhsResult rhs_cor24(const std::vector<const ArithSeq*>& seqs, const Weight& f, double lambda,
                    double b, double tol = 1e-10);

// Drivers: compute both sides, report errors, flag pass/fail at rel_err <= tol.
VerificationReport verify_prop22(const ArithSeq& g1, const ArithSeq& g2, const Weight& f,
                                 double lambda, double a, double b, double tol);
VerificationReport verify_cor24(const std::vector<const ArithSeq*>& seqs, const Weight& f,
                                double lambda, double b, double tol);

// Unbounded-support variant: sum_{n,m >= 1} g1 g2 f((n+m)/lambda) truncated
// at n+m <= N with an analytic tail estimate from the weight's decay and the
// observed growth of the coefficient table.
struct ImproperSumResult {
    double value = 0.0;
    double tail_estimate = 0.0;
    std::int64_t terms_used = 0;
};
// tol < 0 disables the tail check; otherwise a tail estimate above tol
// throws truncation_insufficient.
ImproperSumResult improper_weighted_sum(const ArithSeq& g1, const ArithSeq& g2, const Weight& f,
                                        double lambda, double tol = -1.0);

}  // namespace convav

#endif
