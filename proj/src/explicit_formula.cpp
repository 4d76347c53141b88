#include "convav/explicit_formula.hpp"

#include <cmath>
#include <map>

#include "convav/errors.hpp"
#include "convav/gamma.hpp"
#include "convav/identity.hpp"
#include "convav/kahan.hpp"
#include "convav/quadrature.hpp"

namespace convav {

namespace {

using Cplx = std::complex<double>;

constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi) = zeta'(0)/zeta(0)

// Zero sums always pair rho = 1/2 + i g with its conjugate; sign order is
// fixed (+ then -) so output is deterministic.
template <typename Term>
Cplx paired_zero_sum(const ZeroTable& zeros, Term term, double* last_pair_mag = nullptr) {
    KahanSum<Cplx> acc;
    Cplx last{};
    for (int j = 0; j < zeros.count(); ++j) {
        const double g = zeros.gamma(j);
        const Cplx p = term(Cplx(0.5, g)) + term(Cplx(0.5, -g));
        acc.add(p);
        last = p;
    }
    if (last_pair_mag) *last_pair_mag = std::abs(last);
    return acc.value();
}

double binom(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
    return b;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

// Where to cut an unbounded weight integral: past w_cut the envelope of
// w^{re_alpha} f(w) is below 1e-20.
double decay_cutoff(const Weight& f, double re_alpha) {
    double w = 8.0;
    const double growth = std::max(re_alpha, 0.0) + 1.0;
    for (int i = 0; i < 200; ++i) {
        const double env = std::abs(f(w)) * std::pow(w, growth);
        if (env < 1e-20) return w;
        w *= 1.4;
    }
    return w;
}

// int_I w^alpha f(w) dw for the general-weight terms.
Cplx weight_moment(const Weight& f, Cplx alpha, WeightInterval I) {
    double b = I.b;
    if (std::isinf(b)) b = decay_cutoff(f, alpha.real());
    if (std::isinf(f.support_b()) == false) b = std::min(b, f.support_b());
    const double a = std::max(I.a, f.support_a());
    if (!(b > a)) return {0.0, 0.0};

    QuadOptions opt;
    opt.rel_tol = 1e-12;
    opt.right_power = (std::abs(b - f.support_b()) < 1e-12) ? f.right_endpoint_power(0)
                                                            : std::nullopt;
    if (a < 1e-12 && std::abs(alpha) > 1e-12) opt.left_power = alpha;
    std::vector<double> bps = oscillation_breakpoints_log(std::abs(alpha.imag()), std::max(a, 1e-8), b);
    return integrate([&](double w) { return std::exp(alpha * std::log(w)) * f(w); }, a, b, bps,
                     opt)
        .value;
}

// Shared by cesaro_explicit and the closed-form path of general_weight_terms.
void cesaro_terms(double lambda, Cplx k, const ZeroTable& zeros, Cplx& m0, Cplx& m1, Cplx& m2,
                  double* last_single, double* last_double) {
    const double ll = std::log(lambda);
    m0 = std::exp(2.0 * ll - clgamma(k + 3.0));
    m1 = paired_zero_sum(
        zeros,
        [&](Cplx rho) { return std::exp((rho + 1.0) * ll + clgamma(rho) - clgamma(rho + k + 2.0)); },
        last_single);

    KahanSum<Cplx> acc;
    Cplx last{};
    for (int j1 = 0; j1 < zeros.count(); ++j1) {
        for (int s1 = 0; s1 < 2; ++s1) {
            const Cplx r1(0.5, s1 == 0 ? zeros.gamma(j1) : -zeros.gamma(j1));
            const Cplx lg1 = clgamma(r1);
            for (int j2 = 0; j2 < zeros.count(); ++j2) {
                for (int s2 = 0; s2 < 2; ++s2) {
                    const Cplx r2(0.5, s2 == 0 ? zeros.gamma(j2) : -zeros.gamma(j2));
                    const Cplx t = std::exp((r1 + r2) * ll + lg1 + clgamma(r2) -
                                            clgamma(r1 + r2 + k + 1.0));
                    acc.add(t);
                    last = t;
                }
            }
        }
    }
    m2 = acc.value();
    if (last_double) *last_double = std::abs(last);
}

}  // namespace

ZLambdaResult z_lambda(double lambda, Cplx w, const ZeroTable& zeros) {
    if (lambda < 4.0) throw invalid_argument("z_lambda: lambda must be >= 4");
    const double ll = std::log(lambda);
    ZLambdaResult out;
    out.value = paired_zero_sum(
        zeros,
        [&](Cplx rho) { return std::exp(rho * ll + clgamma(rho) - clgamma(rho + w + 1.0)); },
        &out.last_pair_magnitude);

    const double u = std::abs(w.real());
    const double envelope = std::pow(lambda, u + 1.0) + std::pow(2.0, u) * std::log(std::abs(w) + 2.0);
    out.growth_envelope_ratio =
        std::abs(out.value) * std::abs(std::exp(clgamma(w + 1.0))) / envelope;
    return out;
}

ExplicitTerms m_goldbach(double x, const ZeroTable& zeros) {
    if (!(x > 4.0)) throw invalid_argument("m_goldbach: x must be > 4");
    const double lx = std::log(x);

    ExplicitTerms t;
    t.formula = "mgoldbach";
    t.truncation_K = zeros.count();
    t.m0 = x * x * x / 6.0;

    double last_single = 0.0;
    t.m1 = paired_zero_sum(
        zeros,
        [&](Cplx rho) {
            return std::exp((rho + 2.0) * lx) / (rho * (rho + 1.0) * (rho + 2.0));
        },
        &last_single);

    KahanSum<Cplx> dbl;
    double last_double = 0.0;
    for (int j1 = 0; j1 < zeros.count(); ++j1) {
        for (int s1 = 0; s1 < 2; ++s1) {
            const Cplx r1(0.5, s1 == 0 ? zeros.gamma(j1) : -zeros.gamma(j1));
            const Cplx lg1 = clgamma(r1);
            for (int j2 = 0; j2 < zeros.count(); ++j2) {
                for (int s2 = 0; s2 < 2; ++s2) {
                    const Cplx r2(0.5, s2 == 0 ? zeros.gamma(j2) : -zeros.gamma(j2));
                    const Cplx term = std::exp((r1 + r2 + 1.0) * lx + lg1 + clgamma(r2) -
                                               clgamma(r1 + r2 + 2.0));
                    dbl.add(term);
                    last_double = std::abs(term);
                }
            }
        }
    }
    t.m2 = dbl.value();
    t.combined = t.m0 - 2.0 * t.m1 + t.m2;
    t.diagnostics = {{"last_single_pair", last_single}, {"last_double_term", last_double}};
    return t;
}

ExplicitTerms cesaro_explicit(double lambda, Cplx k, const ZeroTable& zeros,
                              const std::vector<double>* rep_table) {
    if (!(lambda > 4.0)) throw invalid_argument("cesaro_explicit: lambda must be > 4");
    if (!(k.real() > 0.0)) throw domain_error("cesaro_explicit: Re(k) must be > 0");

    ExplicitTerms t;
    t.formula = "cesaro";
    t.truncation_K = zeros.count();
    double last_single = 0.0, last_double = 0.0;
    cesaro_terms(lambda, k, zeros, t.m0, t.m1, t.m2, &last_single, &last_double);
    t.combined = t.m0 - 2.0 * t.m1 + t.m2;
    t.diagnostics = {{"last_single_pair", last_single}, {"last_double_term", last_double}};

    if (rep_table != nullptr) {
        // Exact side lambda^{-k} C_k(lambda) from the tabulated counts.
        const Cplx exact_c =
            std::exp(-k * std::log(lambda)) * cesaro_average(*rep_table, lambda, k);
        t.has_exact = true;
        t.exact = exact_c.real();
        t.residual = (exact_c - t.combined).real();
        t.diagnostics.push_back({"exact_im", exact_c.imag()});
        t.diagnostics.push_back({"combined_im", t.combined.imag()});
    }
    return t;
}

ExplicitTerms general_weight_terms(const Weight& f, double lambda, WeightInterval I,
                                   const ZeroTable& zeros) {
    ExplicitTerms t;
    t.formula = "general_weight";
    t.truncation_K = zeros.count();

    const bool cesaro_closed = f.kind() == Weight::Kind::cesaro && std::abs(I.a) < 1e-15 &&
                               std::abs(I.b - 1.0) < 1e-15;
    if (cesaro_closed) {
        // Beta closed form: int_0^1 w^alpha (1-w)^k dw = G(a+1)G(k+1)/G(a+k+2),
        // which collapses the moment formulas to the same expressions the
        // Cesaro expansion uses.
        double last_single = 0.0, last_double = 0.0;
        cesaro_terms(lambda, Cplx(f.param(), 0.0), zeros, t.m0, t.m1, t.m2, &last_single,
                     &last_double);
        t.diagnostics = {{"last_single_pair", last_single}, {"last_double_term", last_double}};
        t.combined = t.m0 - 2.0 * t.m1 + t.m2;
        return t;
    }

    const double ll = std::log(lambda);
    t.m0 = lambda * lambda * weight_moment(f, Cplx(1.0, 0.0), I);
    t.m1 = paired_zero_sum(zeros, [&](Cplx rho) {
        return std::exp((rho + 1.0) * ll) / rho * weight_moment(f, rho, I);
    });

    // sigma = rho1 + rho2 moments depend only on the ordinate combination;
    // cache them, using conjugate symmetry (f is real-valued).
    std::map<double, Cplx> moment_cache;
    auto sigma_moment = [&](double im) {
        const double key = std::abs(im);
        auto it = moment_cache.find(key);
        if (it == moment_cache.end()) {
            const Cplx v = weight_moment(f, Cplx(0.0, key), I);  // w^{sigma-1}, Re sigma = 1
            it = moment_cache.emplace(key, v).first;
        }
        return im >= 0.0 ? it->second : std::conj(it->second);
    };

    KahanSum<Cplx> acc;
    for (int j1 = 0; j1 < zeros.count(); ++j1) {
        for (int s1 = 0; s1 < 2; ++s1) {
            const Cplx r1(0.5, s1 == 0 ? zeros.gamma(j1) : -zeros.gamma(j1));
            const Cplx lg1 = clgamma(r1);
            for (int j2 = 0; j2 < zeros.count(); ++j2) {
                for (int s2 = 0; s2 < 2; ++s2) {
                    const Cplx r2(0.5, s2 == 0 ? zeros.gamma(j2) : -zeros.gamma(j2));
                    const Cplx sigma = r1 + r2;
                    acc.add(std::exp(sigma * ll + lg1 + clgamma(r2) - clgamma(sigma)) *
                            sigma_moment(sigma.imag()));
                }
            }
        }
    }
    t.m2 = acc.value();
    t.combined = t.m0 - 2.0 * t.m1 + t.m2;
    return t;
}

std::vector<std::pair<std::string, Cplx>> extra_terms_zeta0(const Weight& f, double lambda,
                                                            WeightInterval I,
                                                            const ZeroTable& zeros) {
    const bool cesaro_closed = f.kind() == Weight::Kind::cesaro && std::abs(I.a) < 1e-15 &&
                               std::abs(I.b - 1.0) < 1e-15;
    const double ll = std::log(lambda);

    Cplx int_f, zero_sum;
    if (cesaro_closed) {
        const double k = f.param();
        int_f = std::exp(-clgamma(Cplx(k + 2.0, 0.0)));
        zero_sum = paired_zero_sum(zeros, [&](Cplx rho) {
            return std::exp(rho * ll + clgamma(rho) - clgamma(rho + k + 1.0));
        });
    } else {
        int_f = weight_moment(f, Cplx(0.0, 0.0), I);
        zero_sum = paired_zero_sum(zeros, [&](Cplx rho) {
            return std::exp(rho * ll) * weight_moment(f, rho - 1.0, I);
        });
    }

    return {{"zeta0_const", -2.0 * kLog2Pi * lambda * int_f},
            {"zeta0_zeros", 2.0 * kLog2Pi * zero_sum}};
}

ExplicitTerms psi_rell_terms(double x, int ell, const ZeroTable& zeros, long n_max,
                             std::optional<double> exact_conv) {
    if (!(x > 2.0)) throw invalid_argument("psi_rell_terms: x must be > 2");
    if (ell < 2) throw invalid_argument("psi_rell_terms: ell must be >= 2");
    if (n_max < 0) throw invalid_argument("psi_rell_terms: n_max must be >= 0");

    const double le = static_cast<double>(ell);
    const double inv_ell = 1.0 / le;
    const double lx = std::log(x);

    ExplicitTerms t;
    t.formula = "psi_rell";
    t.truncation_K = zeros.count();
    t.n_max = n_max;

    t.m0 = le * le * std::pow(x, 2.0 + inv_ell) / (2.0 * le * le + 3.0 * le + 1.0);

    double last_single = 0.0;
    t.m1 = -(std::tgamma(inv_ell) / le) *
           paired_zero_sum(
               zeros,
               [&](Cplx rho) {
                   return std::exp((rho + inv_ell + 1.0) * lx + clgamma(rho) -
                                   clgamma(rho + 2.0 + inv_ell));
               },
               &last_single);

    // Oscillatory series from the fractional-part Fourier expansion.
    const double root = std::pow(x, inv_ell);
    KahanSum<double> osc;
    for (long n = 1; n <= n_max; ++n) {
        const double a = 2.0 * M_PI * static_cast<double>(n) * root;
        const double sa = std::sin(a);
        const double ca = std::cos(a);
        KahanSum<double> per_n;
        for (int m = 1; m <= 2; ++m) {
            const double cm = binom(2, m) * (m % 2 == 1 ? -1.0 : 1.0);
            double inv_pow = 1.0 / a;  // a^{-(k+1)} built incrementally
            for (int k = 1; k <= ell * m; ++k) {
                inv_pow /= a;
                // sin(a + k pi/2) cycles through sa, ca, -sa, -ca.
                const double s = (k % 4 == 0) ? sa : (k % 4 == 1) ? ca : (k % 4 == 2) ? -sa : -ca;
                per_n.add(cm * binom(ell * m, k) * factorial(k) * s * inv_pow);
            }
        }
        osc.add(per_n.value());
    }
    // Constant part: int_0^x t {(x-t)^{1/ell}} dt carries the Fourier mean
    // 1/2 of the fractional part integrated against t, i.e. x^2/4.
    t.m2 = -x * x / 4.0 + std::pow(x, 2.0 + inv_ell) * osc.value();
    t.combined = t.m0 + t.m1 + t.m2;

    // Tail of the n-series from its k=1 terms: |terms(n)| <= 4 ell / a_n^2
    // gives tail <= (ell/pi^2) x^{2-1/ell} / n_max.
    const double tail = n_max > 0 ? (le / (M_PI * M_PI)) * std::pow(x, 2.0 - inv_ell) /
                                        static_cast<double>(n_max)
                                  : std::numeric_limits<double>::infinity();
    t.diagnostics = {{"osc_tail_bound", tail}, {"last_single_pair", last_single}};

    if (exact_conv.has_value()) {
        t.has_exact = true;
        t.exact = *exact_conv;
        t.residual = t.exact - t.combined.real();
        t.diagnostics.push_back({"combined_im", t.combined.imag()});
    }
    return t;
}

Cplx frak_I(Cplx alpha, const Weight& f, WeightInterval I) {
    double b = I.b;
    if (std::isinf(b)) b = decay_cutoff(f, alpha.real());
    b = std::min(b, f.support_b());
    const double a = std::max(I.a, 0.0);
    if (!(b > a)) return {0.0, 0.0};

    QuadOptions opt;
    opt.rel_tol = 1e-12;
    opt.right_power =
        (std::abs(b - f.support_b()) < 1e-12) ? f.right_endpoint_power(2) : std::nullopt;
    if (a < 1e-12 && std::abs(alpha) > 1e-12) opt.left_power = alpha;
    std::vector<double> bps =
        oscillation_breakpoints_log(std::abs(alpha.imag()), std::max(a, 1e-8), b);
    return integrate(
               [&](double w) { return std::exp(alpha * std::log(w)) * f.derivative(w, 2); }, a, b,
               bps, opt)
        .value;
}

ExplicitTerms hl_corollary_eval(const Weight& f, double lambda, double b, int ell,
                                const ZeroTable& zeros, long n_max, const ArithSeq* lambda_seq,
                                const ArithSeq* rell_seq) {
    if (!(lambda > 4.0)) throw invalid_argument("hl_corollary_eval: lambda must be > 4");
    if (ell < 2) throw invalid_argument("hl_corollary_eval: ell must be >= 2");

    const double le = static_cast<double>(ell);
    const double inv_ell = 1.0 / le;
    const WeightInterval I{2.0 / lambda, std::min(b, f.support_b())};
    const double ll = std::log(lambda);

    ExplicitTerms t;
    t.formula = "hl_gen";
    t.truncation_K = zeros.count();
    t.n_max = n_max;

    t.m0 = (le * le * std::pow(lambda, 1.0 + inv_ell) / (2.0 * le * le + 3.0 * le + 1.0)) *
           frak_I(Cplx(2.0 + inv_ell, 0.0), f, I);

    t.m1 = -(std::tgamma(inv_ell) / le) * paired_zero_sum(zeros, [&](Cplx rho) {
        return std::exp((rho + inv_ell) * ll + clgamma(rho) - clgamma(rho + 2.0 + inv_ell)) *
               frak_I(rho + 1.0 + inv_ell, f, I);
    });

    const Cplx fractional_main = -0.25 * lambda * frak_I(Cplx(2.0, 0.0), f, I);

    // Oscillatory integrals int_I f''(w) w^{2-k/ell} sin(2 pi n (lambda w)^{1/ell} + k pi/2) dw,
    // shared between the m = 1, 2 groups for the same (n, k).
    KahanSum<Cplx> osc;
    for (long n = 1; n <= n_max; ++n) {
        std::vector<double> osc_integral(static_cast<std::size_t>(2 * ell) + 1, 0.0);
        for (int k = 1; k <= 2 * ell; ++k) {
            QuadOptions opt;
            opt.rel_tol = 1e-11;
            opt.right_power = (std::abs(I.b - f.support_b()) < 1e-12)
                                  ? f.right_endpoint_power(2)
                                  : std::nullopt;
            std::vector<double> bps =
                oscillation_breakpoints_root(static_cast<double>(n), lambda, ell, I.a, I.b);
            const double phase = k * M_PI / 2.0;
            const auto r = integrate_real(
                [&](double w) {
                    const double arg =
                        2.0 * M_PI * static_cast<double>(n) * std::pow(lambda * w, inv_ell) +
                        phase;
                    return f.derivative(w, 2) * std::pow(w, 2.0 - k * inv_ell) * std::sin(arg);
                },
                I.a, I.b, bps, opt);
            osc_integral[static_cast<std::size_t>(k)] = r.value;
        }
        for (int m = 1; m <= 2; ++m) {
            const double cm = binom(2, m) * (m % 2 == 1 ? -1.0 : 1.0);
            for (int k = 1; k <= ell * m; ++k) {
                const double coef = cm * binom(ell * m, k) * factorial(k) *
                                    std::pow(lambda, 1.0 - k * inv_ell) /
                                    std::pow(2.0 * M_PI * static_cast<double>(n), k + 1.0);
                osc.add(coef * osc_integral[static_cast<std::size_t>(k)]);
            }
        }
    }
    t.m2 = fractional_main + osc.value();
    t.extra = {{"fractional_main", fractional_main}, {"oscillatory", osc.value()}};
    t.combined = t.m0 + t.m1 + t.m2;

    if (lambda_seq != nullptr && rell_seq != nullptr) {
        t.has_exact = true;
        t.exact = weighted_sum_2(*rell_seq, *lambda_seq, f, lambda, 0.0, b);
        t.residual = t.exact - t.combined.real();
    }

    // Tail of the oscillatory n-sum from its k=1 terms.
    const double j_abs = std::abs(frak_I(Cplx(2.0 - inv_ell, 0.0), f, I).real());
    const double tail = n_max > 0 ? le * std::pow(lambda, 1.0 - inv_ell) * j_abs /
                                        (M_PI * M_PI * static_cast<double>(n_max))
                                  : std::numeric_limits<double>::infinity();
    t.diagnostics = {{"osc_tail_bound", tail}};
    return t;
}

}  // namespace convav
