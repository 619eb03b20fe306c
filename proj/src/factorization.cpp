#include "ribbon/factorization.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace ribbon {
namespace {

// Reads a as a sequence of copies of g joined by . or (.) and returns the
// outer composition b with b o g == a, if there is one. For l(g) >= 2 the
// join after each copy is decided by the next part alone: g_t means a
// concatenation, g_t + g_1 a near concatenation.
std::optional<std::vector<Part>> match_inner(std::span<const Part> a,
                                             std::span<const Part> g) {
  const std::size_t t = g.size();
  std::vector<Part> outer;
  if (t == 1) {
    for (Part p : a) {
      if (p % g[0] != 0) return std::nullopt;
      outer.push_back(p / g[0]);
    }
    return outer;
  }
  const std::size_t len = a.size();
  const Part joint = g[t - 1] + g[0];
  std::size_t i = 0;
  if (a[i++] != g[0]) return std::nullopt;
  Part copies = 1;
  while (true) {
    for (std::size_t j = 1; j + 1 < t; ++j) {
      if (i >= len || a[i] != g[j]) return std::nullopt;
      ++i;
    }
    if (i >= len) return std::nullopt;
    if (a[i] == g[t - 1]) {
      outer.push_back(copies);
      ++i;
      if (i == len) return outer;
      if (a[i] != g[0]) return std::nullopt;
      ++i;
      copies = 1;
    } else if (a[i] == joint) {
      ++copies;
      ++i;
    } else {
      return std::nullopt;
    }
  }
}

struct MaskKey {
  Part size;
  std::uint64_t mask;
  bool operator==(const MaskKey&) const = default;
};

struct MaskKeyHash {
  std::size_t operator()(const MaskKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.mask * 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(k.size));
  }
};

constexpr std::size_t kCacheLimit = std::size_t{1} << 20;

std::unordered_map<MaskKey, Factorization, MaskKeyHash>& factor_cache() {
  thread_local std::unordered_map<MaskKey, Factorization, MaskKeyHash> cache;
  return cache;
}

void collect_atoms(const Composition& a, SplitOrder order, Factorization& out) {
  const auto splits = split_pairs(a);
  const SplitPair* chosen = nullptr;
  if (order == SplitOrder::first) {
    for (const auto& s : splits)
      if (!is_trivial_pair(s.first, s.second)) { chosen = &s; break; }
  } else {
    for (auto it = splits.rbegin(); it != splits.rend(); ++it)
      if (!is_trivial_pair(it->first, it->second)) { chosen = &*it; break; }
  }
  if (!chosen) {
    out.push_back(a);
    return;
  }
  collect_atoms(chosen->first, order, out);
  collect_atoms(chosen->second, order, out);
}

// Merges adjacent trivial pairs: (a) o (b) -> (ab), 1^a o 1^b -> 1^{ab}.
void merge_trivial_neighbours(Factorization& f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const auto& l = f[i];
      const auto& r = f[i + 1];
      if (l.length() == 1 && r.length() == 1) {
        f[i] = Composition::single(l.size() * r.size());
      } else if (l.all_ones() && r.all_ones()) {
        f[i] = Composition::ones(l.length() * r.length());
      } else {
        continue;
      }
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      changed = true;
      break;
    }
  }
}

Factorization compute_factorization(const Composition& a, SplitOrder order) {
  Factorization atoms;
  collect_atoms(a, order, atoms);
  merge_trivial_neighbours(atoms);
  return atoms;
}

}  // namespace

bool is_trivial_pair(const Composition& b, const Composition& c) {
  if (b.is_one() || c.is_one()) return true;
  if (b.length() == 1 && c.length() == 1) return true;
  return b.all_ones() && c.all_ones();
}

std::vector<SplitPair> split_pairs(const Composition& a) {
  std::vector<SplitPair> out;
  const Part n = a.size();
  const auto parts = a.parts();
  std::vector<Part> inner;
  for (Part q = 2; q < n; ++q) {
    if (n % q != 0) continue;
    // l(c) == 1
    if (auto outer = match_inner(parts, std::span<const Part>(&q, 1)))
      out.emplace_back(Composition(std::move(*outer)), Composition::single(q));
    // l(c) == t >= 2: the first t-1 parts of c are the first t-1 parts of a.
    Part prefix = 0;
    for (std::size_t t = 2; t <= parts.size(); ++t) {
      prefix += parts[t - 2];
      if (prefix >= q) break;
      inner.assign(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(t - 1));
      inner.push_back(q - prefix);
      if (auto outer = match_inner(parts, inner))
        out.emplace_back(Composition(std::move(*outer)), Composition(inner));
    }
  }
  return out;
}

bool is_atom(const Composition& a) {
  const auto splits = split_pairs(a);
  return std::all_of(splits.begin(), splits.end(),
                     [](const SplitPair& s) { return is_trivial_pair(s.first, s.second); });
}

bool is_irreducible(const Composition& a) {
  return a.length() > 1 && !a.all_ones() && is_atom(a);
}

Factorization irreducible_factorization(const Composition& a, SplitOrder order) {
  if (order != SplitOrder::first || a.size() > 64) return compute_factorization(a, order);
  auto& cache = factor_cache();
  const MaskKey key{a.size(), cut_mask(a)};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Factorization f = compute_factorization(a, order);
  if (cache.size() >= kCacheLimit) cache.clear();
  cache.emplace(key, f);
  return f;
}

Composition recompose(const Factorization& factors) {
  if (factors.empty()) throw std::invalid_argument("recompose: empty factor list");
  Composition out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = compose(out, factors[i]);
  return out;
}

Composition normalize(const Composition& a) {
  Factorization f = irreducible_factorization(a);
  for (auto& factor : f) factor = lex_min_form(factor);
  return recompose(f);
}

bool equivalent(const Composition& a, const Composition& b) {
  return a.size() == b.size() && normalize(a) == normalize(b);
}

std::vector<Composition> equivalence_class(const Composition& a) {
  const Factorization f = irreducible_factorization(a);
  std::vector<Composition> members{f.front(), reverse(f.front())};
  for (std::size_t i = 1; i < f.size(); ++i) {
    const Composition rev = reverse(f[i]);
    std::vector<Composition> next;
    next.reserve(members.size() * 2);
    for (const auto& m : members) {
      next.push_back(compose(m, f[i]));
      next.push_back(compose(m, rev));
    }
    members = std::move(next);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

std::size_t count_asymmetric_factors(const Composition& a) {
  const Factorization f = irreducible_factorization(a);
  return static_cast<std::size_t>(
      std::count_if(f.begin(), f.end(), [](const Composition& c) { return !is_symmetric(c); }));
}

void clear_factorization_cache() { factor_cache().clear(); }

}  // namespace ribbon
