#include "convav/arith.hpp"

#include <cmath>
#include <cstddef>

#include "convav/errors.hpp"
#include "convav/gamma.hpp"
#include "convav/kahan.hpp"

namespace convav {

SummatoryTable::SummatoryTable(ArithSeq seq) : source_(std::move(seq)) {
    const std::int64_t N = source_.length();
    prefix_.assign(static_cast<std::size_t>(N) + 1, 0.0);
    KahanSum<double> acc;
    for (std::int64_t n = 1; n <= N; ++n) {
        acc.add(source_.values[static_cast<std::size_t>(n)]);
        prefix_[static_cast<std::size_t>(n)] = acc.value();
    }
}

double SummatoryTable::operator()(double x) const {
    if (x <= 0.0) return 0.0;
    const std::int64_t N = length();
    if (x > static_cast<double>(N))
        throw out_of_table("summatory evaluation at x = " + std::to_string(x) +
                           " beyond table length " + std::to_string(N));
    return prefix_[static_cast<std::size_t>(std::floor(x))];
}

double SummatoryTable::prefix(std::int64_t n) const {
    if (n <= 0) return 0.0;
    if (n > length()) throw out_of_table("prefix index beyond table");
    return prefix_[static_cast<std::size_t>(n)];
}

SummatoryTable summatory(ArithSeq seq) { return SummatoryTable(std::move(seq)); }

ArithSeq sieve_von_mangoldt(std::int64_t N) {
    if (N < 1) throw invalid_argument("sieve_von_mangoldt: N must be >= 1");

    ArithSeq seq;
    seq.name = "Lambda";
    seq.nonnegative = true;
    seq.values.assign(static_cast<std::size_t>(N) + 1, 0.0);

    // Smallest prime factor sieve.
    std::vector<std::int32_t> spf(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t i = 2; i <= N; ++i) {
        if (spf[static_cast<std::size_t>(i)] != 0) continue;
        for (std::int64_t j = i; j <= N; j += i)
            if (spf[static_cast<std::size_t>(j)] == 0)
                spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }

    // n = p^m iff n/spf(n) is 1 or itself a power of the same prime.
    std::vector<char> prime_power(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t n = 2; n <= N; ++n) {
        const std::int64_t p = spf[static_cast<std::size_t>(n)];
        const std::int64_t q = n / p;
        if (q == 1 || (prime_power[static_cast<std::size_t>(q)] &&
                       spf[static_cast<std::size_t>(q)] == p)) {
            prime_power[static_cast<std::size_t>(n)] = 1;
            seq.values[static_cast<std::size_t>(n)] = std::log(static_cast<double>(p));
        }
    }
    return seq;
}

ArithSeq seq_perfect_powers(std::int64_t N, int ell) {
    if (N < 1) throw invalid_argument("seq_perfect_powers: N must be >= 1");
    if (ell < 2) throw invalid_argument("seq_perfect_powers: ell must be >= 2");

    ArithSeq seq;
    seq.name = "r" + std::to_string(ell);
    seq.nonnegative = true;
    seq.values.assign(static_cast<std::size_t>(N) + 1, 0.0);
    for (std::int64_t k = 1;; ++k) {
        std::int64_t pw = 1;
        bool over = false;
        for (int j = 0; j < ell; ++j) {
            if (pw > N / k) {  // pw * k would exceed N
                over = true;
                break;
            }
            pw *= k;
        }
        if (over) break;
        seq.values[static_cast<std::size_t>(pw)] = 1.0;
    }
    return seq;
}

ArithSeq seq_kronecker(std::int64_t N, std::int64_t n0) {
    if (N < 1 || n0 < 1 || n0 > N) throw invalid_argument("seq_kronecker: need 1 <= n0 <= N");
    ArithSeq seq;
    seq.name = "delta" + std::to_string(n0);
    seq.nonnegative = true;
    seq.values.assign(static_cast<std::size_t>(N) + 1, 0.0);
    seq.values[static_cast<std::size_t>(n0)] = 1.0;
    return seq;
}

// One discrete convolution step truncated at N: c[n] = sum_{i+j=n} a[i] b[j].
static std::vector<double> conv_truncated(const std::vector<double>& a,
                                          const std::vector<double>& b, std::int64_t N) {
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    for (std::int64_t n = 2; n <= N; ++n) {
        KahanSum<double> acc;
        for (std::int64_t i = 1; i < n; ++i) {
            const double ai = a[static_cast<std::size_t>(i)];
            if (ai == 0.0) continue;
            acc.add(ai * b[static_cast<std::size_t>(n - i)]);
        }
        c[static_cast<std::size_t>(n)] = acc.value();
    }
    return c;
}

std::vector<double> rep_counts(const std::vector<const ArithSeq*>& seqs) {
    if (seqs.size() < 2) throw invalid_argument("rep_counts: need d >= 2 sequences");
    const std::int64_t N = seqs[0]->length();
    for (const ArithSeq* s : seqs)
        if (s->length() != N) throw invalid_argument("rep_counts: mismatched table lengths");

    // Pairwise left-to-right; truncation at N is safe because only indices
    // <= N are ever queried downstream.
    std::vector<double> acc = conv_truncated(seqs[0]->values, seqs[1]->values, N);
    for (std::size_t j = 2; j < seqs.size(); ++j) acc = conv_truncated(acc, seqs[j]->values, N);
    return acc;
}

double cesaro_average(const std::vector<double>& counts, double x, double k) {
    if (k <= 0.0) throw invalid_argument("cesaro_average: k must be > 0");
    const std::int64_t N = static_cast<std::int64_t>(counts.size()) - 1;
    if (x > static_cast<double>(N)) throw out_of_table("cesaro_average: x beyond table");
    if (x <= 0.0) return 0.0;
    const std::int64_t top = static_cast<std::int64_t>(std::floor(x));
    KahanSum<double> acc;
    for (std::int64_t n = 1; n <= top; ++n) {
        const double c = counts[static_cast<std::size_t>(n)];
        if (c == 0.0) continue;
        const double d = x - static_cast<double>(n);
        acc.add(c * (d > 0.0 ? std::pow(d, k) : 0.0));
    }
    return acc.value() / std::tgamma(k + 1.0);
}

std::complex<double> cesaro_average(const std::vector<double>& counts, double x,
                                    std::complex<double> k) {
    if (k.real() <= 0.0) throw invalid_argument("cesaro_average: Re k must be > 0");
    const std::int64_t N = static_cast<std::int64_t>(counts.size()) - 1;
    if (x > static_cast<double>(N)) throw out_of_table("cesaro_average: x beyond table");
    if (x <= 0.0) return {0.0, 0.0};
    const std::int64_t top = static_cast<std::int64_t>(std::floor(x));
    KahanSum<std::complex<double>> acc;
    for (std::int64_t n = 1; n <= top; ++n) {
        const double c = counts[static_cast<std::size_t>(n)];
        if (c == 0.0) continue;
        const double d = x - static_cast<double>(n);
        if (d <= 0.0) continue;  // the n = x term vanishes for Re k > 0
        acc.add(c * std::exp(k * std::log(d)));
    }
    return acc.value() * std::exp(-clgamma(k + 1.0));
}

}  // namespace convav
