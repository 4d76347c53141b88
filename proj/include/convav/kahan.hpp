// Kahan compensated accumulator.  All long sums in the library run through
// this so identity checks sit near machine precision instead of drifting
// with table length.  Works for double and std::complex<double> alike
// (compensation is componentwise for complex).

#ifndef CONVAV_KAHAN_HPP
#define CONVAV_KAHAN_HPP

namespace convav {

template <typename T>
class KahanSum {
  public:
    void add(const T& x) {
        const T y = x - comp_;
        const T t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    const T& value() const { return sum_; }

  private:
    T sum_{};
    T comp_{};
};

}  // namespace convav

#endif
