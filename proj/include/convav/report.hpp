// Report types produced by the verification and explicit-formula drivers,
// plus their deterministic JSON serialization.  Numbers are printed with 15
// significant digits as JSON numbers; key order is fixed, so identical
// inputs give byte-identical output.

#ifndef CONVAV_REPORT_HPP
#define CONVAV_REPORT_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace convav {

struct VerificationReport {
    std::string identity;  // "prop22", "cor24", ...
    std::vector<std::pair<std::string, double>> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;   // |lhs - rhs|
    double rel_err = 0.0;   // abs_err / max(|lhs|, |rhs|, 1)
    bool pass = false;
    long quadrature_panels = 0;
    std::string notes;
};

// Computes abs/rel errors and the pass flag at tolerance tol.
VerificationReport make_report(std::string identity,
                               std::vector<std::pair<std::string, double>> params, double lhs,
                               double rhs, double tol, long panels, std::string notes = "");

struct ExplicitTerms {
    std::string formula;  // which expansion was instantiated
    std::complex<double> m0{}, m1{}, m2{};
    std::vector<std::pair<std::string, std::complex<double>>> extra;
    // Assembled main expression, e.g. m0 - 2 m1 + m2 (+ extras) for the
    // Cesaro expansion or m0 + m1 + m2 for the prime/power one.
    std::complex<double> combined{};
    bool has_exact = false;
    double exact = 0.0;     // ground-truth side, when available
    double residual = 0.0;  // exact - Re(combined)
    int truncation_K = 0;
    long n_max = 0;
    std::vector<std::pair<std::string, double>> diagnostics;
};

struct SeriesComparison {
    std::string formula;
    std::complex<double> exact_partial{};
    std::complex<double> explicit_value{};
    bool has_second_route = false;
    std::complex<double> second_route{};  // the integral route of the Dirichlet check
    long n_terms = 0;
    int truncation_K = 0;
    double residual = 0.0;  // |exact_partial - explicit_value|
    bool near_pole = false;
    std::vector<std::pair<std::string, double>> diagnostics;
};

// --- serialization -------------------------------------------------------

std::string format_double15(double v);
std::string json_escape(const std::string& s);

std::string to_json(const VerificationReport& r);
std::string to_json(const ExplicitTerms& t);
std::string to_json(const SeriesComparison& s);

}  // namespace convav

#endif
