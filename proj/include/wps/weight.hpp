#ifndef WPS_WEIGHT_HPP
#define WPS_WEIGHT_HPP

#include <optional>
#include <string>
#include <vector>

#include "wps/numeric.hpp"

namespace wps {

/* If the entries fail well-formedness, returns one offending (m-1)-subset
 * (every m-1 entries must be coprime; a single entry must be 1). */
std::optional<std::vector<int>>
well_formed_violation(std::vector<int> const & entries);

bool is_well_formed(std::vector<int> const & entries);

/* Weight tuple (w_1, ..., w_m) with gcd 1, so the orbit description of
 * rational points applies.  Construction validates. */
class Weight {
  public:
    explicit Weight(std::vector<int> entries);

    std::vector<int> const & entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[i]; }
    Int total() const { return total_; }     // |W|
    int min_entry() const { return min_; }   // w_min
    bool operator==(Weight const &) const = default;

  private:
    std::vector<int> entries_;
    Int total_ = 0;
    int min_ = 0;
};

Weight parse_weight(std::string const & text); // "1,1,2"
std::string format_weight(Weight const & W);

/* throws input_error naming the offending (m-1)-subset */
void require_well_formed(Weight const & W);

/* Effective divisor class (a_1, ..., a_k) on a product of k spaces. */
struct DivisorClass {
    std::vector<Int> exponents;
    bool operator==(DivisorClass const &) const = default;
};

DivisorClass make_divisor(std::vector<Int> exponents); // validates
DivisorClass anticanonical_divisor(std::vector<Weight> const & weights);
std::string format_divisor(DivisorClass const & D);

} // namespace wps

#endif
