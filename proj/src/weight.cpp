#include "wps/weight.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wps {

std::optional<std::vector<int>>
well_formed_violation(std::vector<int> const & entries)
{
    require(!entries.empty(), "weight tuple must be nonempty");
    for (int e : entries)
        require(e >= 1, "weights must be positive integers");
    int m = static_cast<int>(entries.size());
    if (m == 1) {
        if (entries[0] != 1)
            return entries;
        return std::nullopt;
    }
    for (int drop = 0; drop < m; ++drop) {
        Int g = 0;
        std::vector<int> subset;
        for (int i = 0; i < m; ++i) {
            if (i == drop)
                continue;
            g = std::gcd(g, static_cast<Int>(entries[i]));
            subset.push_back(entries[i]);
        }
        if (g != 1)
            return subset;
    }
    return std::nullopt;
}

bool is_well_formed(std::vector<int> const & entries)
{
    return !well_formed_violation(entries).has_value();
}

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries))
{
    require(!entries_.empty(), "weight tuple must be nonempty");
    Int g = 0;
    for (int e : entries_) {
        require(e >= 1, "weights must be positive integers");
        g = std::gcd(g, static_cast<Int>(e));
    }
    // gcd 1 is what the orbit description of rational points needs; the
    // stronger (m-1)-subset condition is checked where the asymptotic
    // theorems require it
    require(g == 1, "weight tuple must have gcd 1");
    total_ = std::accumulate(entries_.begin(), entries_.end(), Int(0));
    min_ = *std::min_element(entries_.begin(), entries_.end());
}

void require_well_formed(Weight const & W)
{
    if (auto bad = well_formed_violation(W.entries())) {
        std::ostringstream os;
        os << "weight (" << format_weight(W)
           << ") is not well-formed: subset {";
        for (size_t i = 0; i < bad->size(); ++i)
            os << (i ? "," : "") << (*bad)[i];
        os << "} has gcd > 1";
        throw input_error(os.str());
    }
}

Weight parse_weight(std::string const & text)
{
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            require(pos == tok.size(), "bad weight entry '" + tok + "'");
            entries.push_back(v);
        } catch (std::logic_error const &) {
            throw input_error("bad weight entry '" + tok + "'");
        }
    }
    require(!entries.empty(), "empty weight tuple");
    return Weight(entries);
}

std::string format_weight(Weight const & W)
{
    std::ostringstream os;
    for (int i = 0; i < W.size(); ++i)
        os << (i ? "," : "") << W[i];
    return os.str();
}

DivisorClass make_divisor(std::vector<Int> exponents)
{
    require(!exponents.empty(), "divisor class must be nonempty");
    bool positive = false;
    for (Int a : exponents) {
        require(a >= 0, "divisor exponents must be nonnegative");
        positive |= a > 0;
    }
    require(positive, "divisor class must be effective (some a_i > 0)");
    return {std::move(exponents)};
}

DivisorClass anticanonical_divisor(std::vector<Weight> const & weights)
{
    require(!weights.empty(), "anticanonical divisor of an empty product");
    std::vector<Int> a;
    for (auto const & W : weights)
        a.push_back(W.total());
    return {std::move(a)};
}

std::string format_divisor(DivisorClass const & D)
{
    std::ostringstream os;
    for (size_t i = 0; i < D.exponents.size(); ++i)
        os << (i ? "," : "") << D.exponents[i];
    return os.str();
}

} // namespace wps
