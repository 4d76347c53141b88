// Table of nontrivial zeta zero ordinates.
//
// The table stores the ascending positive imaginary parts gamma_j; zeros are
// always used in the RH normal form rho = 1/2 + i gamma together with their
// conjugates 1/2 - i gamma.  All known zeros satisfy RH, and the conditional
// statements the table feeds are exactly the regime the data supports.

#ifndef CONVAV_ZEROS_HPP
#define CONVAV_ZEROS_HPP

#include <complex>
#include <istream>
#include <string>
#include <vector>

namespace convav {

class ZeroTable {
  public:
    ZeroTable() = default;
    explicit ZeroTable(std::vector<double> gammas);

    int count() const { return static_cast<int>(gammas_.size()); }
    double gamma(int j) const { return gammas_[static_cast<std::size_t>(j)]; }
    const std::vector<double>& gammas() const { return gammas_; }

    std::complex<double> rho(int j) const { return {0.5, gammas_[static_cast<std::size_t>(j)]}; }

    // First K ordinates (K clamped to the table size).
    ZeroTable truncated(int K) const;

  private:
    std::vector<double> gammas_;
};

// One positive decimal ordinate per line, strictly ascending; '#' comments
// and blank lines allowed.  Throws parse_error with the offending line
// number on non-numeric, non-positive or non-ascending input.
ZeroTable load_zeros(std::istream& in);
ZeroTable load_zeros_file(const std::string& path);

}  // namespace convav

#endif
