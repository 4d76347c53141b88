#include "convav/zeros.hpp"

#include <cstdlib>
#include <fstream>

#include "convav/errors.hpp"

namespace convav {

ZeroTable::ZeroTable(std::vector<double> gammas) : gammas_(std::move(gammas)) {
    for (std::size_t j = 0; j < gammas_.size(); ++j) {
        if (gammas_[j] <= 0.0) throw invalid_argument("ZeroTable: ordinates must be positive");
        if (j > 0 && gammas_[j] <= gammas_[j - 1])
            throw invalid_argument("ZeroTable: ordinates must be strictly ascending");
    }
}

ZeroTable ZeroTable::truncated(int K) const {
    if (K < 0) K = 0;
    if (K >= count()) return *this;
    return ZeroTable(std::vector<double>(gammas_.begin(), gammas_.begin() + K));
}

ZeroTable load_zeros(std::istream& in) {
    std::vector<double> gammas;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // strip comments and surrounding whitespace
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        char* end = nullptr;
        const double v = std::strtod(line.c_str(), &end);
        if (end == line.c_str() || *end != '\0')
            throw parse_error("not a decimal ordinate: '" + line + "'", line_no);
        if (v <= 0.0) throw parse_error("ordinate must be positive", line_no);
        if (!gammas.empty() && v <= gammas.back())
            throw parse_error("ordinates must be strictly ascending", line_no);
        gammas.push_back(v);
    }
    return ZeroTable(std::move(gammas));
}

ZeroTable load_zeros_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument("cannot open zeros file: " + path);
    return load_zeros(in);
}

}  // namespace convav
