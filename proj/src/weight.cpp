#include "convav/weight.hpp"

#include <cmath>
#include <complex>

#include "convav/errors.hpp"

namespace convav {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Weight::Weight(Kind kind, double p, double a, double b) : kind_(kind), p_(p), a_(a), b_(b) {}

Weight Weight::cesaro(double k) {
    if (k <= 0.0) throw invalid_argument("cesaro weight: k must be > 0");
    return Weight(Kind::cesaro, k, 0.0, 1.0);
}

Weight Weight::exponential(double rate) {
    if (rate <= 0.0) throw invalid_argument("exponential weight: rate must be > 0");
    return Weight(Kind::exponential, rate, 0.0, kInf);
}

Weight Weight::power(double s, double support_start) {
    if (support_start <= 0.0) throw invalid_argument("power weight: support start must be > 0");
    return Weight(Kind::power, s, support_start, kInf);
}

Weight Weight::damped(const std::string& h_name) {
    if (h_name != "one" && h_name != "cos")
        throw invalid_argument("damped weight: unknown h descriptor '" + h_name + "'");
    Weight w(Kind::damped, 0.0, 0.0, kInf);
    w.h_name_ = h_name;
    return w;
}

double Weight::derivative(double w, int j) const {
    if (j < 0 || j > max_order_) throw invalid_argument("weight derivative order out of range");
    switch (kind_) {
        case Kind::cesaro: {
            if (w <= 0.0 || w >= 1.0) return 0.0;
            // f^(j)(w) = (-1)^j k(k-1)...(k-j+1) (1-w)^{k-j} / Gamma(k+1).
            // The falling factorial vanishes for integer k < j; compute it
            // first so the (1-w)^{k-j} blowup is never touched then.
            double coef = 1.0;
            for (int i = 0; i < j; ++i) coef *= (p_ - static_cast<double>(i));
            if (coef == 0.0) return 0.0;
            if (j % 2 == 1) coef = -coef;
            return coef * std::pow(1.0 - w, p_ - static_cast<double>(j)) / std::tgamma(p_ + 1.0);
        }
        case Kind::exponential: {
            if (w < 0.0) return 0.0;
            double coef = 1.0;
            for (int i = 0; i < j; ++i) coef *= -p_;
            return coef * std::exp(-p_ * w);
        }
        case Kind::power: {
            if (w < a_) return 0.0;
            double coef = 1.0;
            for (int i = 0; i < j; ++i) coef *= (p_ + static_cast<double>(i));
            if (j % 2 == 1) coef = -coef;
            return coef * std::pow(w, -p_ - static_cast<double>(j));
        }
        case Kind::damped: {
            if (w < 0.0) return 0.0;
            if (h_name_ == "one") {
                return (j % 2 == 0 ? 1.0 : -1.0) * std::exp(-w);
            }
            // h = cos: f(w) = Re exp(-(1+i)w), so f^(j) = Re[(-(1+i))^j exp(-(1+i)w)].
            const std::complex<double> z(1.0, 1.0);
            std::complex<double> coef(1.0, 0.0);
            for (int i = 0; i < j; ++i) coef *= -z;
            return (coef * std::exp(-z * w)).real();
        }
    }
    return 0.0;
}

std::optional<double> Weight::right_endpoint_power(int j) const {
    if (kind_ != Kind::cesaro) return std::nullopt;
    // Integer k: every derivative is a plain polynomial (or identically 0).
    if (std::abs(p_ - std::round(p_)) < 1e-12) return std::nullopt;
    const double q = p_ - static_cast<double>(j);
    if (q > 7.0) return std::nullopt;  // effectively smooth for GL8
    return q;
}

double Weight::derivative_at_support_end(int j) const {
    if (kind_ != Kind::cesaro) return 0.0;  // decaying kinds vanish at +inf
    const double q = p_ - static_cast<double>(j);
    if (q > 1e-12) return 0.0;
    if (std::abs(q) < 1e-12) return (j % 2 == 0) ? 1.0 : -1.0;  // k = j: constant (-1)^j
    // k < j: either identically zero (integer k) or divergent.
    double coef = 1.0;
    for (int i = 0; i < j; ++i) coef *= (p_ - static_cast<double>(i));
    if (coef == 0.0) return 0.0;
    throw domain_error("weight derivative of order " + std::to_string(j) +
                       " diverges at the support endpoint (k = " + std::to_string(p_) + ")");
}

std::string Weight::describe() const {
    switch (kind_) {
        case Kind::cesaro:
            return "cesaro:" + std::to_string(p_);
        case Kind::exponential:
            return "exp:" + std::to_string(p_);
        case Kind::power:
            return "power:" + std::to_string(p_);
        case Kind::damped:
            return "damped:" + h_name_;
    }
    return "?";
}

Weight parse_weight(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    try {
        if (kind == "cesaro") return Weight::cesaro(std::stod(arg));
        if (kind == "exp" || kind == "exponential") return Weight::exponential(std::stod(arg));
        if (kind == "power") return Weight::power(std::stod(arg), 1.0);
        if (kind == "damped") return Weight::damped(arg.empty() ? "one" : arg);
    } catch (const std::logic_error&) {
        throw invalid_argument("cannot parse weight parameter in '" + text + "'");
    }
    throw invalid_argument("unknown weight kind '" + kind + "'");
}

}  // namespace convav
