#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/oracle.hpp"

namespace ribbon {

enum class Variant {
  all,                     // normal forms (distinct ribbon Schur functions)
  irreducible,             // normalised irreducible compositions
  symmetric_irreducible,
  asymmetric_irreducible,
  lexmin,                  // lexicographically minimal compositions
  compositions,            // all compositions, 2^{n-1}
};

std::optional<Variant> parse_variant(std::string_view name);
std::string_view variant_name(Variant v);

enum class Method { formula, brute };

/// a(1..max_n) from the Dirichlet-series formulas.
std::vector<mpz_class> formula_sequence(Variant v, int max_n);

/// a(1..max_n) by exhaustive enumeration of every composition.
std::vector<mpz_class> brute_sequence(Variant v, int max_n, const OracleBudget& budget = {}, int jobs = 1);

/// Plain-text cache of computed sequences, one file per (variant, method,
/// bound). Files carry a format-version header; a file with any other header
/// is treated as absent and rewritten.
class SequenceCache {
 public:
  static constexpr std::string_view kHeader = "# ribbon-sequence-cache v1";

  explicit SequenceCache(std::string directory);

  std::optional<std::vector<mpz_class>> load(Variant v, Method m, int max_n) const;
  void store(Variant v, Method m, int max_n, const std::vector<mpz_class>& values) const;
  std::string path_for(Variant v, Method m, int max_n) const;

 private:
  std::string dir_;
};

}  // namespace ribbon
