// Smooth weights f for the summation identities, with closed-form
// derivatives of every order used.  Four built-in kinds:
//
//   cesaro(k)       f(w) = (1-w)^k / Gamma(k+1)   on (0,1), 0 outside
//   exponential(r)  f(w) = exp(-r w)              on [0, inf)
//   power(s, a)     f(w) = w^{-s}                 on [a, inf), Re s > 2 for sums
//   damped(h)       f(w) = exp(-w) h(w)           on [0, inf), h and its first
//                   two derivatives bounded; built-in h: "one", "cos"
//
// Derivatives are analytic per kind, never finite-differenced.

#ifndef CONVAV_WEIGHT_HPP
#define CONVAV_WEIGHT_HPP

#include <limits>
#include <optional>
#include <string>

namespace convav {

class Weight {
  public:
    enum class Kind { cesaro, exponential, power, damped };

    static Weight cesaro(double k);
    static Weight exponential(double rate);
    static Weight power(double s, double support_start);
    static Weight damped(const std::string& h_name);  // "one" or "cos"

    double operator()(double w) const { return derivative(w, 0); }
    // j-th derivative of f at w; 0 outside the open support.
    double derivative(double w, int j) const;

    double support_a() const { return a_; }
    double support_b() const { return b_; }  // +inf for unbounded kinds
    bool unbounded() const { return b_ == std::numeric_limits<double>::infinity(); }
    int max_derivative_order() const { return max_order_; }

    Kind kind() const { return kind_; }
    double param() const { return p_; }  // k, rate, or s
    const std::string& h_name() const { return h_name_; }
    std::string describe() const;

    // Exponent q such that the j-th derivative behaves like C (b-w)^q as
    // w -> b^- and that behaviour is not polynomial-smooth; nullopt when the
    // derivative is smooth there.  Drives graded quadrature panels.
    std::optional<double> right_endpoint_power(int j) const;

    // lim_{w -> b^-} f^{(j)}(w).  Zero for the decaying kinds.  For cesaro(k)
    // this is 0 when k > j and (-1)^j when k = j; it diverges for k < j and
    // then throws domain_error (the identities are not asserted there).
    // A nonzero value feeds the distributional boundary term
    //   -(1/lambda) f'(b-) (G1*G2)(lambda b)
    // that the summation identity picks up when f' does not vanish at b.
    double derivative_at_support_end(int j) const;

  private:
    Weight(Kind kind, double p, double a, double b);
    Kind kind_;
    double p_;        // k / rate / s
    double a_, b_;    // support
    int max_order_ = 12;
    std::string h_name_;
};

// Parse "cesaro:2", "exp:1.5", "power:3", "damped:cos".  power support start
// defaults to 0 here; callers pin it to 1/lambda where the formulas need it.
Weight parse_weight(const std::string& text);

}  // namespace convav

#endif
