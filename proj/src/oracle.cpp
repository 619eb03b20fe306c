#include "ribbon/oracle.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_map>

#include "ribbon/factorization.hpp"

namespace ribbon {
namespace {

void check_budget(int n, int limit, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (n > limit)
    throw BudgetExceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds budget " +
                         std::to_string(limit));
}

// Runs body(begin, end) on `jobs` threads over [0, 2^{n-1}); returns the
// per-thread results in range order.
template <class Result>
std::vector<Result> over_masks(int n, int jobs, const std::function<Result(std::uint64_t, std::uint64_t)>& body) {
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const auto workers = static_cast<std::uint64_t>(std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(jobs, 1)), 1, total));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = body(0, total);
    return results;
  }
  std::vector<std::jthread> threads;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] { results[w] = body(begin, end); });
  }
  threads.clear();
  return results;
}

using ClassCounts = std::unordered_map<Composition, std::uint64_t>;

ClassCounts count_classes(int n, int jobs) {
  auto parts = over_masks<ClassCounts>(n, jobs, [n](std::uint64_t begin, std::uint64_t end) {
    ClassCounts counts;
    for (std::uint64_t mask = begin; mask < end; ++mask) ++counts[normalize(from_cut_mask(n, mask))];
    return counts;
  });
  ClassCounts merged = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i)
    for (auto& [nf, c] : parts[i]) merged[nf] += c;
  return merged;
}

// Encodes a partition of n as a mixed-radix integer over its multiplicities:
// part p contributes weight(p), and the digit for p never exceeds n/p.
class PartitionEncoder {
 public:
  explicit PartitionEncoder(int n) : weight_(static_cast<std::size_t>(n) + 1) {
    std::uint64_t w = 1;
    for (int p = 1; p <= n; ++p) {
      weight_[static_cast<std::size_t>(p)] = w;
      if (__builtin_mul_overflow(w, static_cast<std::uint64_t>(n / p + 1), &w))
        throw BudgetExceeded("partition encoding overflows 64 bits for n=" + std::to_string(n));
    }
  }
  std::uint64_t weight(Part p) const { return weight_[static_cast<std::size_t>(p)]; }

 private:
  std::vector<std::uint64_t> weight_;
};

using FingerprintKey = std::vector<std::pair<std::uint64_t, std::int64_t>>;

FingerprintKey encoded_fingerprint(const Composition& a, const PartitionEncoder& enc,
                                   FingerprintKey& scratch) {
  const auto parts = a.parts();
  const std::size_t gaps = parts.size() - 1;
  scratch.clear();
  for (std::uint64_t keep = 0; keep < (std::uint64_t{1} << gaps); ++keep) {
    // bit i of `keep` set: the boundary after parts[i] survives.
    std::uint64_t key = 0;
    Part run = parts[0];
    int blocks = 1;
    for (std::size_t i = 0; i < gaps; ++i) {
      if (keep >> i & 1u) {
        key += enc.weight(run);
        run = parts[i + 1];
        ++blocks;
      } else {
        run += parts[i + 1];
      }
    }
    key += enc.weight(run);
    const bool negative = (static_cast<int>(parts.size()) - blocks) % 2 != 0;
    scratch.emplace_back(key, negative ? -1 : 1);
  }
  std::sort(scratch.begin(), scratch.end());
  FingerprintKey out;
  for (const auto& [key, sign] : scratch) {
    if (!out.empty() && out.back().first == key) out.back().second += sign;
    else out.emplace_back(key, sign);
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

}  // namespace

HFingerprint h_fingerprint(const Composition& a) {
  const auto parts = a.parts();
  const std::size_t gaps = parts.size() - 1;
  if (gaps >= 63) throw BudgetExceeded("h_fingerprint: composition too long");
  HFingerprint out;
  for (std::uint64_t keep = 0; keep < (std::uint64_t{1} << gaps); ++keep) {
    Partition lambda;
    Part run = parts[0];
    for (std::size_t i = 0; i < gaps; ++i) {
      if (keep >> i & 1u) {
        lambda.push_back(run);
        run = parts[i + 1];
      } else {
        run += parts[i + 1];
      }
    }
    lambda.push_back(run);
    const bool negative = (parts.size() - lambda.size()) % 2 != 0;
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    out[lambda] += negative ? -1 : 1;
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

std::vector<ClassEntry> brute_force_classes(int n, const OracleBudget& budget, int jobs) {
  check_budget(n, budget.classes, "brute_force_classes");
  const ClassCounts counts = count_classes(n, jobs);
  std::vector<ClassEntry> out;
  out.reserve(counts.size());
  for (const auto& [nf, c] : counts) out.push_back({nf, c});
  std::sort(out.begin(), out.end(),
            [](const ClassEntry& a, const ClassEntry& b) { return a.normal_form < b.normal_form; });
  return out;
}

LengthPoly brute_force_length_histogram(int n, const OracleBudget& budget, int jobs) {
  check_budget(n, budget.histogram, "brute_force_length_histogram");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [nf, c] : count_classes(n, jobs)) coeffs[nf.length()] += 1;
  return LengthPoly(coeffs);
}

BiPoly brute_force_refined_histogram(int n, const OracleBudget& budget, int jobs) {
  check_budget(n, budget.histogram, "brute_force_refined_histogram");
  BiPoly out;
  for (const auto& [nf, c] : count_classes(n, jobs))
    out.add(static_cast<long>(nf.length()), static_cast<long>(count_asymmetric_factors(nf)), 1);
  return out;
}

CrossValidationReport cross_validate(int n, const OracleBudget& budget, int jobs) {
  check_budget(n, budget.semantic, "cross_validate");
  const PartitionEncoder enc(n);
  struct Row {
    Composition normal_form;
    FingerprintKey fingerprint;
  };
  auto chunks = over_masks<std::vector<Row>>(n, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Row> rows;
    rows.reserve(end - begin);
    FingerprintKey scratch;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const Composition a = from_cut_mask(n, mask);
      rows.push_back({normalize(a), encoded_fingerprint(a, enc, scratch)});
    }
    return rows;
  });

  CrossValidationReport report;
  report.n = n;
  std::map<Composition, std::size_t> by_normal_form;      // -> first row index
  std::map<FingerprintKey, std::size_t> by_fingerprint;   // -> first row index
  std::vector<const Row*> rows;
  for (const auto& chunk : chunks)
    for (const auto& row : chunk) rows.push_back(&row);
  report.compositions = rows.size();

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto [nf_it, nf_new] = by_normal_form.try_emplace(rows[i]->normal_form, i);
    const auto [fp_it, fp_new] = by_fingerprint.try_emplace(rows[i]->fingerprint, i);
    // Consistent iff the first member of each group is the same row, or both
    // groups are new.
    if (nf_it->second != fp_it->second) {
      const std::size_t other = nf_new ? fp_it->second : nf_it->second;
      report.counterexamples.emplace_back(from_cut_mask(n, other), from_cut_mask(n, i));
    }
  }
  report.normal_form_groups = by_normal_form.size();
  report.fingerprint_groups = by_fingerprint.size();
  return report;
}

}  // namespace ribbon
