// Error taxonomy shared by all modules.
//
// Precondition violations (bad arguments, evaluation past the end of a
// table, malformed input files) are distinguished from runtime numeric
// trouble (quadrature that refuses to converge, truncated series whose
// tail estimate exceeds the requested tolerance).  The CLI maps the
// first group to exit code 2 and the second to exit code 1.

#ifndef CONVAV_ERRORS_HPP
#define CONVAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace convav {

struct invalid_argument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation point beyond the tabulated range [0, N].
struct out_of_table : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Malformed data file; message carries a 1-based line number.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    long line_number;
};

// Gamma evaluated at a pole, Re(k) <= 0 where positive is required, etc.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Adaptive quadrature hit maximum refinement with panel estimates still
// disagreeing beyond the requested tolerance.
struct numeric_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A truncated series' analytic tail estimate exceeds the requested tolerance.
struct truncation_insufficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace convav

#endif
