#include "convav/gamma.hpp"

#include <cmath>

#include "convav/errors.hpp"

namespace convav {

namespace {

using Cplx = std::complex<double>;

// Lanczos coefficients, g = 7, 9 terms; relative error ~1e-13 for
// Re z >= 1/2 in double precision.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,     676.5203681218851,
                                -1259.1392167224028,     771.32342877765313,
                                -176.61502916214059,     12.507343278686905,
                                -0.13857109526572012,    9.9843695780195716e-6,
                                1.5056327351493116e-7};

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2 pi))

// log sin(pi z) without overflow for large |Im z|.
Cplx log_sin_pi(Cplx z) {
    const double y = z.imag();
    if (std::abs(y) <= 12.0) return std::log(std::sin(M_PI * z));
    if (y > 0.0) {
        // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i); |e^{2 i pi z}| = e^{-2 pi y} << 1.
        const Cplx small = std::exp(Cplx(0.0, 2.0 * M_PI) * z);
        return Cplx(0.0, -M_PI) * z + Cplx(-M_LN2, M_PI / 2.0) + std::log(1.0 - small);
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

Cplx lanczos_lgamma_right(Cplx z) {
    // Valid for Re z >= 1/2.  Shift zz = z - 1 per the classical scheme.
    const Cplx zz = z - 1.0;
    Cplx series(kLanczos[0], 0.0);
    for (int i = 1; i < 9; ++i) series += kLanczos[i] / (zz + static_cast<double>(i));
    const Cplx t = zz + kLanczosG + 0.5;
    return kLogSqrt2Pi + (zz + 0.5) * std::log(t) - t + std::log(series);
}

bool is_nonpositive_integer(Cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

}  // namespace

std::complex<double> clgamma(std::complex<double> z) {
    if (is_nonpositive_integer(z)) throw domain_error("clgamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return lanczos_lgamma_right(z);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(M_PI) - log_sin_pi(z) - lanczos_lgamma_right(1.0 - z);
}

std::complex<double> cgamma(std::complex<double> z) { return std::exp(clgamma(z)); }

std::complex<double> gamma_ratio2(std::complex<double> a, std::complex<double> b,
                                  std::complex<double> c) {
    return std::exp(clgamma(a) + clgamma(b) - clgamma(c));
}

std::complex<double> gamma_ratio(std::complex<double> a, std::complex<double> c) {
    return std::exp(clgamma(a) - clgamma(c));
}

}  // namespace convav
