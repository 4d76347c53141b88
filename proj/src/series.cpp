#include "convav/series.hpp"

#include <algorithm>
#include <cmath>

#include "convav/errors.hpp"
#include "convav/gamma.hpp"
#include "convav/kahan.hpp"

namespace convav {

namespace {

using Cplx = std::complex<double>;

template <typename Term>
Cplx paired_zero_sum(const ZeroTable& zeros, Term term) {
    KahanSum<Cplx> acc;
    for (int j = 0; j < zeros.count(); ++j) {
        const double g = zeros.gamma(j);
        acc.add(term(Cplx(0.5, g)) + term(Cplx(0.5, -g)));
    }
    return acc.value();
}

// Largest c(n)/n over the last decade of the table: growth coefficient for
// linear-growth tail models.
double linear_growth(const std::vector<double>& c) {
    const std::int64_t N = static_cast<std::int64_t>(c.size()) - 1;
    double g = 0.0;
    for (std::int64_t n = std::max<std::int64_t>(1, (9 * N) / 10); n <= N; ++n)
        g = std::max(g, c[static_cast<std::size_t>(n)] / static_cast<double>(n));
    return g;
}

}  // namespace

SeriesComparison goldbach_exp_series(double y, const std::vector<double>& rep_table,
                                     const ArithSeq& lambda_seq, const ZeroTable& zeros) {
    if (!(y > 0.0)) throw invalid_argument("goldbach_exp_series: y must be > 0");
    const std::int64_t N = static_cast<std::int64_t>(rep_table.size()) - 1;
    if (N < 2) throw invalid_argument("goldbach_exp_series: table too short");

    SeriesComparison out;
    out.formula = "goldbach_exp_series";
    out.n_terms = N;
    out.truncation_K = zeros.count();

    const double head = 1.0 / (y * y);
    const double cut = std::exp(-y * static_cast<double>(N));
    const double tail_est =
        linear_growth(rep_table) * cut * (static_cast<double>(N) / y + 1.0 / (y * y));
    if (cut >= 2.220446049250313e-16 * head)
        throw truncation_insufficient("goldbach_exp_series: exp(-N y) not below epsilon * head");

    KahanSum<double> exact;
    for (std::int64_t n = 2; n <= N; ++n) {
        const double c = rep_table[static_cast<std::size_t>(n)];
        if (c == 0.0) continue;
        exact.add(c * std::exp(-y * static_cast<double>(n)));
    }
    out.exact_partial = exact.value();

    // Factorization partner (sum Lambda(n) e^{-ny})^2 over the same table.
    KahanSum<double> psi_series;
    for (std::int64_t n = 1; n <= std::min(N, lambda_seq.length()); ++n) {
        const double v = lambda_seq.at(n);
        if (v == 0.0) continue;
        psi_series.add(v * std::exp(-y * static_cast<double>(n)));
    }
    const double factor_sq = psi_series.value() * psi_series.value();

    const double ly = std::log(y);
    const Cplx single = paired_zero_sum(
        zeros, [&](Cplx rho) { return std::exp(-(rho + 1.0) * ly + clgamma(rho)); });
    const Cplx zsum =
        paired_zero_sum(zeros, [&](Cplx rho) { return std::exp(-rho * ly + clgamma(rho)); });
    out.explicit_value = head - 2.0 * single + zsum * zsum;

    out.residual = std::abs(out.exact_partial - out.explicit_value);
    out.diagnostics = {{"tail_estimate", tail_est},
                       {"factorization_sq", factor_sq},
                       {"factorization_rel_diff",
                        std::abs(out.exact_partial.real() - factor_sq) /
                            std::max({std::abs(out.exact_partial.real()), factor_sq, 1e-300})},
                       {"explicit_im", out.explicit_value.imag()}};
    return out;
}

SeriesComparison dirichlet_phi(Cplx s, const std::vector<double>& rep_table, std::int64_t N,
                               std::int64_t U, const ZeroTable& zeros) {
    if (!(s.real() > 2.0))
        throw invalid_argument("dirichlet_phi: Re(s) must be > 2 for the direct sum");
    const std::int64_t len = static_cast<std::int64_t>(rep_table.size()) - 1;
    if (N > len || U > len) throw out_of_table("dirichlet_phi: N and U must be <= table length");

    SeriesComparison out;
    out.formula = "dirichlet_phi";
    out.n_terms = N;
    out.truncation_K = zeros.count();

    // Near-pole warning at s = 2 and s = 1 + rho.
    if (std::abs(s - 2.0) < 1e-6) out.near_pole = true;
    for (int j = 0; j < zeros.count() && !out.near_pole; ++j) {
        if (std::abs(s - Cplx(1.5, zeros.gamma(j))) < 1e-6 ||
            std::abs(s - Cplx(1.5, -zeros.gamma(j))) < 1e-6)
            out.near_pole = true;
    }

    // (i) partial sum of R(n) n^{-s}.
    KahanSum<Cplx> partial;
    for (std::int64_t n = 2; n <= N; ++n) {
        const double c = rep_table[static_cast<std::size_t>(n)];
        if (c == 0.0) continue;
        partial.add(c * std::exp(-s * std::log(static_cast<double>(n))));
    }
    out.exact_partial = partial.value();

    // (ii) s(s+1) int_1^U u^{-s-2} (psi*psi)(u) du, exactly per unit interval:
    // on [n, n+1] the convolution equals A_n u - B_n with A_n = sum R(m),
    // B_n = sum m R(m) over m <= n.
    {
        KahanSum<double> A, B;
        KahanSum<Cplx> integral;
        Cplx npow_s = 1.0, npow_s1 = 1.0;  // n^{-s}, n^{-s-1} at n = 1
        for (std::int64_t n = 1; n < U; ++n) {
            if (n <= len) {
                A.add(rep_table[static_cast<std::size_t>(n)]);
                B.add(static_cast<double>(n) * rep_table[static_cast<std::size_t>(n)]);
            }
            const double np1 = static_cast<double>(n + 1);
            const Cplx np1pow_s = std::exp(-s * std::log(np1));
            const Cplx np1pow_s1 = np1pow_s / np1;
            integral.add(A.value() * (npow_s - np1pow_s) / s -
                         B.value() * (npow_s1 - np1pow_s1) / (s + 1.0));
            npow_s = np1pow_s;
            npow_s1 = np1pow_s1;
        }
        out.second_route = s * (s + 1.0) * integral.value();
        out.has_second_route = true;
    }

    // (iii) meromorphic expansion over the zero table.
    const Cplx ss1 = s * (s + 1.0);
    Cplx expansion = ss1 / (6.0 * (s - 2.0));
    expansion -= 2.0 * paired_zero_sum(zeros, [&](Cplx rho) {
        return ss1 / (rho * (rho + 1.0) * (rho + 2.0) * (s - rho - 1.0));
    });
    {
        KahanSum<Cplx> dbl;
        for (int j1 = 0; j1 < zeros.count(); ++j1) {
            for (int s1 = 0; s1 < 2; ++s1) {
                const Cplx r1(0.5, s1 == 0 ? zeros.gamma(j1) : -zeros.gamma(j1));
                const Cplx lg1 = clgamma(r1);
                for (int j2 = 0; j2 < zeros.count(); ++j2) {
                    for (int s2 = 0; s2 < 2; ++s2) {
                        const Cplx r2(0.5, s2 == 0 ? zeros.gamma(j2) : -zeros.gamma(j2));
                        const Cplx sigma = r1 + r2;
                        dbl.add(std::exp(lg1 + clgamma(r2) - clgamma(sigma + 2.0)) * ss1 /
                                (s - sigma));
                    }
                }
            }
        }
        expansion += dbl.value();
    }
    out.explicit_value = expansion;
    out.residual = std::abs(out.exact_partial - out.explicit_value);

    // Analytic tails: R(n) grows ~ c n, (psi*psi)(u) ~ c3 u^3.
    const double re_s = s.real();
    const double tail_partial = linear_growth(rep_table) *
                                std::pow(static_cast<double>(N), 2.0 - re_s) / (re_s - 2.0);
    double c3 = 0.0;
    {
        KahanSum<double> A, B;
        for (std::int64_t n = 1; n <= U; ++n) {
            if (n > len) break;
            A.add(rep_table[static_cast<std::size_t>(n)]);
            B.add(static_cast<double>(n) * rep_table[static_cast<std::size_t>(n)]);
            if (n >= (9 * U) / 10) {
                const double conv_top = A.value() * static_cast<double>(n + 1) - B.value();
                c3 = std::max(c3, conv_top / std::pow(static_cast<double>(n), 3.0));
            }
        }
    }
    const double tail_integral = std::abs(ss1) * c3 *
                                 std::pow(static_cast<double>(U), 2.0 - re_s) / (re_s - 2.0);
    out.diagnostics = {{"tail_partial", tail_partial},
                       {"tail_integral", tail_integral},
                       {"U", static_cast<double>(U)},
                       {"routes_diff", std::abs(out.exact_partial - out.second_route)}};
    return out;
}

std::vector<RatioRow> asymptotic_ratio(const std::vector<double>& rep_table,
                                       const std::vector<double>& x_grid) {
    const std::int64_t N = static_cast<std::int64_t>(rep_table.size()) - 1;
    std::vector<double> xs = x_grid;
    std::sort(xs.begin(), xs.end());
    for (double x : xs)
        if (x > static_cast<double>(N)) throw out_of_table("asymptotic_ratio: x beyond table");

    std::vector<RatioRow> rows;
    rows.reserve(xs.size());
    KahanSum<double> A, B;  // sum R(n), sum n R(n)
    std::int64_t n = 0;
    for (double x : xs) {
        const std::int64_t top = static_cast<std::int64_t>(std::floor(x));
        for (; n < top;) {
            ++n;
            A.add(rep_table[static_cast<std::size_t>(n)]);
            B.add(static_cast<double>(n) * rep_table[static_cast<std::size_t>(n)]);
        }
        RatioRow row;
        row.x = x;
        row.ratio_quadratic = A.value() / (x * x / 2.0);
        // (psi*psi)(x) = x * sum R(n) - sum n R(n)  (exact closed form)
        row.ratio_cubic = (x * A.value() - B.value()) / (x * x * x / 6.0);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace convav
