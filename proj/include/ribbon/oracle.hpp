#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/composition.hpp"
#include "ribbon/length_gf.hpp"

namespace ribbon {

/// A weakly decreasing list of positive parts.
using Partition = std::vector<Part>;

/// Expansion of a ribbon Schur function in the complete homogeneous basis:
/// partition -> nonzero integer coefficient. Equal fingerprints mean equal
/// ribbon Schur functions, since the h_lambda are a basis.
using HFingerprint = std::map<Partition, std::int64_t>;

/// r_a = sum over coarsenings b of a of (-1)^{l(a) - l(b)} h_{sort(b)}.
HFingerprint h_fingerprint(const Composition& a);

/// Upper limits on n for the exhaustive routines.
struct OracleBudget {
  int classes = 20;
  int histogram = 18;
  int semantic = 16;
};

class BudgetExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct ClassEntry {
  Composition normal_form;
  std::uint64_t size;
};

/// Groups all 2^{n-1} compositions of n by normal form. Sorted by normal
/// form. `jobs` worker threads split the cut-mask range.
std::vector<ClassEntry> brute_force_classes(int n, const OracleBudget& budget = {}, int jobs = 1);

/// x^m coefficient: number of classes whose normal form has length m.
LengthPoly brute_force_length_histogram(int n, const OracleBudget& budget = {}, int jobs = 1);

/// x^m z^k coefficient: number of classes whose normal form has length m and
/// k asymmetric irreducible factors.
BiPoly brute_force_refined_histogram(int n, const OracleBudget& budget = {}, int jobs = 1);

struct CrossValidationReport {
  int n = 0;
  std::uint64_t compositions = 0;
  std::uint64_t normal_form_groups = 0;
  std::uint64_t fingerprint_groups = 0;
  /// Pairs on which the two groupings disagree: same fingerprint and
  /// different normal form, or the reverse.
  std::vector<std::pair<Composition, Composition>> counterexamples;

  bool identical() const {
    return counterexamples.empty() && normal_form_groups == fingerprint_groups;
  }
};

/// Compares the partition of compositions of n by h-fingerprint with the
/// partition by normal form.
CrossValidationReport cross_validate(int n, const OracleBudget& budget = {}, int jobs = 1);

}  // namespace ribbon
