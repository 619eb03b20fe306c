#include "ribbon/sequences.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ribbon/dirichlet.hpp"
#include "ribbon/factorization.hpp"

namespace ribbon {
namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 6> kVariantNames{{
    {Variant::all, "all"},
    {Variant::irreducible, "irreducible"},
    {Variant::symmetric_irreducible, "symmetric-irreducible"},
    {Variant::asymmetric_irreducible, "asymmetric-irreducible"},
    {Variant::lexmin, "lexmin"},
    {Variant::compositions, "compositions"},
}};

}  // namespace

std::optional<Variant> parse_variant(std::string_view name) {
  for (const auto& [v, n] : kVariantNames)
    if (n == name) return v;
  return std::nullopt;
}

std::string_view variant_name(Variant v) {
  for (const auto& [value, n] : kVariantNames)
    if (value == v) return n;
  return "?";
}

std::vector<mpz_class> formula_sequence(Variant v, int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  const auto N = static_cast<std::size_t>(max_n);
  switch (v) {
    case Variant::all: return series_R(N).integer_coefficients();
    case Variant::irreducible: return series_P(N).integer_coefficients();
    case Variant::symmetric_irreducible: return series_Pstar(N).integer_coefficients();
    case Variant::asymmetric_irreducible: return series_Pcross(N).integer_coefficients();
    case Variant::lexmin: return series_lexmin(N).integer_coefficients();
    case Variant::compositions: return series_C(N).integer_coefficients();
  }
  throw std::logic_error("unknown variant");
}

std::vector<mpz_class> brute_sequence(Variant v, int max_n, const OracleBudget& budget, int jobs) {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  if (max_n > budget.classes)
    throw BudgetExceeded("brute-force sequence: max_n=" + std::to_string(max_n) + " exceeds budget " +
                         std::to_string(budget.classes));
  std::vector<mpz_class> out;
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t count = 0;
    if (v == Variant::compositions) {
      for_each_composition(n, [&](const Composition&) { ++count; });
    } else if (v == Variant::lexmin) {
      for_each_composition(n, [&](const Composition& a) { count += a <= reverse(a) ? 1 : 0; });
    } else {
      for (const auto& entry : brute_force_classes(n, budget, jobs)) {
        const Composition& nf = entry.normal_form;
        switch (v) {
          case Variant::all: ++count; break;
          case Variant::irreducible: count += is_irreducible(nf); break;
          case Variant::symmetric_irreducible: count += is_irreducible(nf) && is_symmetric(nf); break;
          case Variant::asymmetric_irreducible: count += is_irreducible(nf) && !is_symmetric(nf); break;
          default: break;
        }
      }
    }
    out.emplace_back(static_cast<unsigned long>(count));
  }
  return out;
}

SequenceCache::SequenceCache(std::string directory) : dir_(std::move(directory)) {}

std::string SequenceCache::path_for(Variant v, Method m, int max_n) const {
  const std::string file = std::string(variant_name(v)) + (m == Method::brute ? "-brute-" : "-formula-") +
                           std::to_string(max_n) + ".txt";
  return (std::filesystem::path(dir_) / file).string();
}

std::optional<std::vector<mpz_class>> SequenceCache::load(Variant v, Method m, int max_n) const {
  std::ifstream in(path_for(v, m, max_n));
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header) || header != kHeader) return std::nullopt;
  std::vector<mpz_class> values;
  long n = 0;
  std::string value;
  while (in >> n >> value) {
    if (n != static_cast<long>(values.size()) + 1) return std::nullopt;
    mpz_class parsed;
    if (parsed.set_str(value, 10) != 0) return std::nullopt;
    values.push_back(std::move(parsed));
  }
  if (static_cast<int>(values.size()) != max_n) return std::nullopt;
  return values;
}

void SequenceCache::store(Variant v, Method m, int max_n, const std::vector<mpz_class>& values) const {
  std::filesystem::create_directories(dir_);
  const std::string path = path_for(v, m, max_n);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << kHeader << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ' ' << values[i].get_str() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ribbon
