#include "convav/step_conv.hpp"

#include <cmath>
#include <cstddef>

#include "convav/errors.hpp"
#include "convav/kahan.hpp"

namespace convav {

ConvKernel::ConvKernel(int order, std::vector<double> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 1) throw invalid_argument("ConvKernel: order must be >= 1");
    if (coeffs_.empty()) throw invalid_argument("ConvKernel: empty coefficient table");
    min_support_ = length() + 1;
    for (std::int64_t n = 1; n <= length(); ++n) {
        if (coeffs_[static_cast<std::size_t>(n)] != 0.0) {
            min_support_ = n;
            break;
        }
    }
}

double ConvKernel::eval(double x) const {
    if (x > static_cast<double>(length()))
        throw out_of_table("ConvKernel::eval at x = " + std::to_string(x) +
                           " beyond table length " + std::to_string(length()));
    if (x < static_cast<double>(min_support_)) return 0.0;

    const int pow_order = order_ - 1;
    double factorial = 1.0;
    for (int j = 2; j <= pow_order; ++j) factorial *= static_cast<double>(j);

    const std::int64_t top = static_cast<std::int64_t>(std::floor(x));
    KahanSum<double> acc;
    for (std::int64_t n = min_support_; n <= top; ++n) {
        const double c = coeffs_[static_cast<std::size_t>(n)];
        if (c == 0.0) continue;
        const double d = x - static_cast<double>(n);
        double p = 1.0;  // repeated multiplication, d <= ~6 in practice
        for (int j = 0; j < pow_order; ++j) p *= d;
        acc.add(c * p);
    }
    return acc.value() / factorial;
}

ConvKernel kernel_build(const std::vector<const ArithSeq*>& seqs) {
    if (seqs.size() < 2) throw invalid_argument("kernel_build: need d >= 2 sequences");
    return ConvKernel(static_cast<int>(seqs.size()), rep_counts(seqs));
}

double laplace_convolve(const SummatoryTable& G1, const SummatoryTable& G2, double x) {
    if (x < 0.0) return 0.0;
    const std::vector<const ArithSeq*> seqs{&G1.source(), &G2.source()};
    return kernel_build(seqs).eval(x);
}

double nested_convolve(const std::vector<const ArithSeq*>& seqs, double x) {
    if (x < 0.0) return 0.0;
    return kernel_build(seqs).eval(x);
}

}  // namespace convav
