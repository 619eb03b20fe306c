#pragma once

#include <utility>
#include <vector>

#include "ribbon/composition.hpp"

namespace ribbon {

/// An ordered list of atoms whose o-product is the factored composition.
/// Produced by irreducible_factorization; no factor is (1) unless the whole
/// composition is (1), and no adjacent pair is trivial.
using Factorization = std::vector<Composition>;

using SplitPair = std::pair<Composition, Composition>;

/// True iff b o c is a trivial factorization: one side is (1), both have
/// length 1, or both are all-ones.
bool is_trivial_pair(const Composition& b, const Composition& c);

/// All (b, c) with b o c == a, b != (1) and c != (1). Ordered by |c|
/// ascending, then by l(c) ascending.
std::vector<SplitPair> split_pairs(const Composition& a);

/// True iff every factorization a = b o c is trivial.
bool is_atom(const Composition& a);

/// An atom of length > 1 that is not all-ones.
bool is_irreducible(const Composition& a);

/// Which nontrivial split the recursive factorizer takes first. Both orders
/// must produce the same result.
enum class SplitOrder { first, last };

Factorization irreducible_factorization(const Composition& a,
                                        SplitOrder order = SplitOrder::first);

/// Left-to-right o-product of a nonempty factor list.
Composition recompose(const Factorization& factors);

/// Replaces every irreducible factor by its lexicographically smaller
/// orientation. Two compositions give the same ribbon Schur function iff
/// their normal forms agree.
Composition normalize(const Composition& a);

bool equivalent(const Composition& a, const Composition& b);

/// Every o-product obtained by independently reversing factors; sorted.
std::vector<Composition> equivalence_class(const Composition& a);

std::size_t count_asymmetric_factors(const Composition& a);

/// Drops this thread's memo of normal forms and factorizations.
void clear_factorization_cache();

}  // namespace ribbon
