// Arithmetical sequences and their summatory step functions.
//
//   Lambda(n) = log p  if n = p^m for a prime p and m >= 1, else 0
//   r_ell(n)  = 1      if n = k^ell for some k >= 1, else 0
//   G(x)      = sum_{n <= x} g(n)   (right-continuous step function, 0 for x <= 0)
//
// Representation counts for a tuple of sequences g_1..g_d:
//
//   G(n) = sum_{m_1 + ... + m_d = n, m_j >= 1} g_1(m_1) ... g_d(m_d)
//
// computed by iterated discrete convolution, truncated at the table length.
// For d = 2 and Lambda,Lambda this is the Goldbach representation count.

#ifndef CONVAV_ARITH_HPP
#define CONVAV_ARITH_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace convav {

struct ArithSeq {
    std::string name;
    // 1-based: values[n] is g(n) for 1 <= n <= length(); values[0] is 0.
    std::vector<double> values;
    bool nonnegative = true;

    std::int64_t length() const { return static_cast<std::int64_t>(values.size()) - 1; }
    double at(std::int64_t n) const { return (n >= 1 && n <= length()) ? values[static_cast<std::size_t>(n)] : 0.0; }
};

// Prefix sums of an ArithSeq, evaluable at any real x in [0, N].
class SummatoryTable {
  public:
    explicit SummatoryTable(ArithSeq seq);

    // G(x): 0 for x <= 0, prefix[floor(x)] for 0 < x <= N.  Right-closed at
    // integers, matching "sum over n <= x".  Throws out_of_table past N.
    double operator()(double x) const;

    std::int64_t length() const { return source_.length(); }
    const ArithSeq& source() const { return source_; }
    double prefix(std::int64_t n) const;  // G(n) for integer n, clamped below at 0

  private:
    ArithSeq source_;
    std::vector<double> prefix_;
};

// Von Mangoldt function on 1..N.  Exact prime-power detection via a sieve;
// no floating-point log comparisons.
ArithSeq sieve_von_mangoldt(std::int64_t N);

// Indicator of perfect ell-th powers on 1..N (ell >= 2).
ArithSeq seq_perfect_powers(std::int64_t N, int ell);

// Kronecker delta at position n0 (test helper; basis sequences of the
// convolution identity).
ArithSeq seq_kronecker(std::int64_t N, std::int64_t n0);

SummatoryTable summatory(ArithSeq seq);

// Iterated discrete convolution of d >= 2 sequences sharing table length N,
// truncated at N.  Entry n holds sum over compositions m_1+...+m_d = n.
std::vector<double> rep_counts(const std::vector<const ArithSeq*>& seqs);

// Cesaro average of order k > 0 of a coefficient table:
//   C_k(x) = (1/Gamma(k+1)) sum_{n <= x} (x - n)^k c(n)
// counts is 1-based like ArithSeq::values.  x must not exceed the table.
double cesaro_average(const std::vector<double>& counts, double x, double k);
std::complex<double> cesaro_average(const std::vector<double>& counts, double x,
                                    std::complex<double> k);

}  // namespace convav

#endif
