// Exact Laplace convolution of summatory step functions.
//
// The nested convolution of d summatory functions collapses to a piecewise
// polynomial with integer breakpoints:
//
//   (G_1 * (G_2 * ... * (G_{d-1} * G_d)))(x)
//       = (1/(d-1)!) sum_{n <= x} G(n) (x - n)^{d-1}
//
// with G(n) the d-fold representation counts.  Evaluation is O(N) per point
// and exact up to rounding, so the headline identity checks carry no
// quadrature error from this side.

#ifndef CONVAV_STEP_CONV_HPP
#define CONVAV_STEP_CONV_HPP

#include <cstdint>
#include <vector>

#include "convav/arith.hpp"

namespace convav {

class ConvKernel {
  public:
    ConvKernel(int order, std::vector<double> coeffs);

    // (1/(d-1)!) sum_{n <= x} coeffs[n] (x-n)^{d-1} for 0 <= x <= N.
    // (x-n)^{d-1} by repeated multiplication; compensated outer sum.
    double eval(double x) const;

    int order() const { return order_; }
    std::int64_t length() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    // Smallest n with coeffs[n] != 0, or N+1 when all vanish.
    std::int64_t min_support() const { return min_support_; }

  private:
    int order_;
    std::vector<double> coeffs_;
    std::int64_t min_support_;
};

// Precompute the d-fold kernel for repeated evaluation.
ConvKernel kernel_build(const std::vector<const ArithSeq*>& seqs);

// (G1 * G2)(x) = integral_0^x G1(x-s) G2(s) ds via the closed form.
double laplace_convolve(const SummatoryTable& G1, const SummatoryTable& G2, double x);

// d-fold nested convolution at x; d = 2 agrees with laplace_convolve exactly.
double nested_convolve(const std::vector<const ArithSeq*>& seqs, double x);

}  // namespace convav

#endif
