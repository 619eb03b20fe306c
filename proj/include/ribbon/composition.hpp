#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

using Part = std::int64_t;

/// A nonempty list of positive integers. Encodes a ribbon of size |a| and
/// height l(a) - 1.
///
/// Values are immutable after construction. Equality is structural and
/// ordering is sequence-lexicographic (a proper prefix sorts first); on equal
/// lengths this is the usual component-wise lexicographic order.
class Composition {
 public:
  Composition(std::initializer_list<Part> parts);
  explicit Composition(std::vector<Part> parts);

  /// The composition (n).
  static Composition single(Part n);
  /// The composition (1,1,...,1) of length n.
  static Composition ones(std::size_t n);

  std::span<const Part> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  Part size() const { return size_; }
  Part operator[](std::size_t i) const { return parts_[i]; }
  Part front() const { return parts_.front(); }
  Part back() const { return parts_.back(); }

  bool is_one() const { return parts_.size() == 1 && parts_[0] == 1; }
  bool all_ones() const { return size_ == static_cast<Part>(parts_.size()); }

  bool operator==(const Composition&) const = default;
  std::strong_ordering operator<=>(const Composition& other) const;

  std::string to_string() const;

 private:
  std::vector<Part> parts_;
  Part size_ = 0;
};

/// a . b
Composition concatenate(const Composition& a, const Composition& b);
/// a (.) b: the last part of a and the first part of b are added.
Composition near_concatenate(const Composition& a, const Composition& b);
/// a (.) a (.) ... (.) a with n copies. Requires n >= 1.
Composition odot_power(const Composition& a, Part n);
/// a o b = b^{(.)a_1} . b^{(.)a_2} ... b^{(.)a_k}
Composition compose(const Composition& a, const Composition& b);
Composition reverse(const Composition& a);
bool is_symmetric(const Composition& a);
/// min(a, a*)
Composition lex_min_form(const Composition& a);

/// Component-wise lexicographic comparison; see Composition::operator<=>.
inline std::strong_ordering compare_lex(const Composition& a,
                                        const Composition& b) {
  return a <=> b;
}

/// Visits every composition of n exactly once. The order is the integer
/// order of the cut mask: bit i (0-based) of the mask set means a cut after
/// position i+1, so mask 0 gives (n) and mask 2^{n-1}-1 gives (1,...,1).
void for_each_composition(int n, const std::function<void(const Composition&)>& visit);
std::vector<Composition> enumerate_compositions(int n);

/// The composition of n whose cut mask is `mask` (see for_each_composition).
Composition from_cut_mask(int n, std::uint64_t mask);
/// Inverse of from_cut_mask. Requires size() <= 64.
std::uint64_t cut_mask(const Composition& a);

/// Parses "1,2,1" or "(1,2,1)". Whitespace around tokens is ignored.
/// Throws ParseError naming the offending token.
Composition parse_composition(std::string_view text);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ribbon

template <>
struct std::hash<ribbon::Composition> {
  std::size_t operator()(const ribbon::Composition& c) const noexcept;
};
