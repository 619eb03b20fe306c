#include "ribbon/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "ribbon/bfile.hpp"
#include "ribbon/composition.hpp"
#include "ribbon/factorization.hpp"
#include "ribbon/length_gf.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/sequences.hpp"

namespace ribbon::cli {
namespace {

using nlohmann::json;

json to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const Composition& c) { return json(std::vector<Part>(c.parts().begin(), c.parts().end())); }

std::string bare(const Composition& c) {
  std::string s = c.to_string();
  return s.substr(1, s.size() - 2);
}

std::string bracketed(const std::vector<mpz_class>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}

// Dense coefficient list x^0..x^n.
std::vector<mpz_class> dense(const LengthPoly& p, long n) {
  std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1, 0);
  for (long e = 0; e <= n; ++e) out[static_cast<std::size_t>(e)] = p.coeff(e);
  return out;
}

struct Globals {
  bool json = false;
  int jobs = 1;
  std::string cache_dir;
};

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  int emit(const std::string& command, json parameters, json result, const std::string& text, int code) {
    if (globals.json) {
      json doc{{"command", command}, {"parameters", std::move(parameters)}, {"result", std::move(result)}};
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << text;
    }
    return code;
  }

  std::optional<SequenceCache> cache() const {
    std::string dir = globals.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv(kCacheDirEnv)) dir = env;
    if (dir.empty()) return std::nullopt;
    return SequenceCache(dir);
  }

  std::vector<mpz_class> sequence(Variant v, Method m, int max_n) {
    const auto store = cache();
    if (store)
      if (auto hit = store->load(v, m, max_n)) return *hit;
    auto values = m == Method::brute ? brute_sequence(v, max_n, {}, globals.jobs) : formula_sequence(v, max_n);
    if (store) store->store(v, m, max_n, values);
    return values;
  }

  int count(int max_n, Variant variant, Method method) {
    const auto values = sequence(variant, method, max_n);
    std::ostringstream text;
    json seq = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      text << i + 1 << ' ' << values[i].get_str() << '\n';
      seq.push_back(to_json(values[i]));
    }
    json params{{"max_n", max_n},
                {"variant", variant_name(variant)},
                {"method", method == Method::brute ? "brute" : "formula"}};
    json result{{"sequence", seq}, {"variant", variant_name(variant)}};
    return emit("count", params, result, text.str(), kOk);
  }

  int count_length(int n, bool refined) {
    json params{{"n", n}, {"refined", refined}};
    std::ostringstream text;
    if (!refined) {
      const auto coeffs = dense(poly_R_recursive(n), n);
      text << bracketed(coeffs) << '\n';
      json arr = json::array();
      for (const auto& c : coeffs) arr.push_back(to_json(c));
      return emit("count-length", params, json{{"n", n}, {"coefficients", arr}}, text.str(), kOk);
    }
    const BiPoly bi = poly_R_refined(n);
    json table = json::array();
    for (long k = 0; k <= bi.max_z(); ++k) {
      std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1, 0);
      for (long e = 0; e <= n; ++e) row[static_cast<std::size_t>(e)] = bi.coeff(e, k);
      text << "z^" << k << ": " << bracketed(row) << '\n';
      json arr = json::array();
      for (const auto& c : row) arr.push_back(to_json(c));
      table.push_back(arr);
    }
    return emit("count-length", params, json{{"n", n}, {"table", table}}, text.str(), kOk);
  }

  int factor(const Composition& a) {
    const Factorization f = irreducible_factorization(a);
    std::string text;
    json factors = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
      text += (i ? " ∘ " : "") + f[i].to_string();
      factors.push_back(to_json(f[i]));
    }
    return emit("factor", json{{"composition", to_json(a)}}, json{{"factors", factors}}, text + "\n", kOk);
  }

  int normalize_cmd(const Composition& a) {
    const Composition nf = normalize(a);
    return emit("normalize", json{{"composition", to_json(a)}}, json{{"normal_form", to_json(nf)}},
                bare(nf) + "\n", kOk);
  }

  int equiv(const Composition& a, const Composition& b) {
    const Composition na = normalize(a), nb = normalize(b);
    const bool same = a.size() == b.size() && na == nb;
    std::ostringstream text;
    text << (same ? "true" : "false") << '\n' << bare(na) << '\n' << bare(nb) << '\n';
    json result{{"equivalent", same}, {"normal_forms", json::array({to_json(na), to_json(nb)})}};
    return emit("equiv", json{{"compositions", json::array({to_json(a), to_json(b)})}}, result, text.str(),
                same ? kOk : kNegative);
  }

  int klass(const Composition& a) {
    std::string text;
    json members = json::array();
    for (const auto& m : equivalence_class(a)) {
      text += bare(m) + "\n";
      members.push_back(to_json(m));
    }
    return emit("class", json{{"composition", to_json(a)}}, json{{"members", members}}, text, kOk);
  }

  int oracle_check(int n) {
    const OracleBudget budget;
    if (n > budget.semantic)
      throw BudgetExceeded("oracle-check: n=" + std::to_string(n) + " exceeds budget " +
                           std::to_string(budget.semantic));
    const CrossValidationReport report = cross_validate(n, budget, globals.jobs);
    const auto classes = brute_force_classes(n, budget, globals.jobs).size();
    const mpz_class formula = formula_sequence(Variant::all, n).back();
    const mpz_class lexmin = formula_sequence(Variant::lexmin, n).back();
    const mpz_class excess = lexmin - static_cast<unsigned long>(classes);
    const bool counts_agree = formula == static_cast<unsigned long>(classes);
    const bool ok = report.identical() && counts_agree;

    std::ostringstream text;
    text << classes << " classes; fingerprint partition "
         << (report.identical() ? "identical" : "differs") << "; lexmin excess " << excess.get_str() << '\n';
    if (!counts_agree) text << "formula count " << formula.get_str() << " disagrees with enumeration\n";
    json examples = json::array();
    for (std::size_t i = 0; i < report.counterexamples.size() && i < 10; ++i) {
      const auto& [x, y] = report.counterexamples[i];
      text << "counterexample: " << x.to_string() << " vs " << y.to_string() << '\n';
      examples.push_back(json::array({to_json(x), to_json(y)}));
    }
    json result{{"classes", classes},
                {"formula", to_json(formula)},
                {"fingerprint_groups", report.fingerprint_groups},
                {"normal_form_groups", report.normal_form_groups},
                {"identical", report.identical()},
                {"lexmin_excess", to_json(excess)},
                {"counterexamples", examples},
                {"consistent", ok}};
    return emit("oracle-check", json{{"n", n}}, result, text.str(), ok ? kOk : kNegative);
  }

  int oeis_compare(const std::string& path, Variant variant) {
    const BFile file = read_bfile(path);
    long max_index = 1;
    for (const auto& [n, v] : file.entries) {
      if (n < 1) throw std::out_of_range("b-file index " + std::to_string(n) + " is not positive");
      max_index = std::max(max_index, n);
    }
    const auto computed = sequence(variant, Method::formula, static_cast<int>(max_index));
    const auto diffs = compare_bfile(file, computed);
    std::ostringstream text;
    json arr = json::array();
    for (const auto& d : diffs) {
      text << "n=" << d.n << ": file " << d.file_value.get_str() << ", computed " << d.computed.get_str() << '\n';
      arr.push_back(json{{"n", d.n}, {"file", to_json(d.file_value)}, {"computed", to_json(d.computed)}});
    }
    text << diffs.size() << (diffs.size() == 1 ? " difference" : " differences") << " in "
         << file.entries.size() << " entries\n";
    json result{{"entries", file.entries.size()}, {"differences", arr}};
    return emit("oeis-compare", json{{"bfile", path}, {"variant", variant_name(variant)}}, result, text.str(),
                diffs.empty() ? kOk : kNegative);
  }

  Globals globals;

 private:
  std::ostream& out_;
};

Variant require_variant(const std::string& name) {
  if (auto v = parse_variant(name)) return *v;
  throw CLI::ValidationError("--variant", "unknown variant '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out);
  CLI::App app{"Ribbon Schur function equality and enumeration"};
  app.name(args.empty() ? "ribbon" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", runner.globals.json, "Emit JSON {command, parameters, result}");
  app.add_option("--jobs", runner.globals.jobs, "Worker threads for exhaustive enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", runner.globals.cache_dir,
                 std::string("Sequence cache directory (default: $") + kCacheDirEnv + ")");

  int max_n = 33;
  std::string variant = "all";
  std::string method = "formula";
  auto* count = app.add_subcommand("count", "Sequence of counts by size");
  count->add_option("--max-n", max_n, "Largest size")->check(CLI::PositiveNumber);
  count->add_option("--variant", variant,
                    "all | irreducible | symmetric-irreducible | asymmetric-irreducible | lexmin | compositions");
  count->add_option("--method", method, "formula | brute")->check(CLI::IsMember({"formula", "brute"}));

  int length_n = 0;
  bool refined = false;
  auto* count_length = app.add_subcommand("count-length", "Normal forms of size n by length");
  count_length->add_option("n", length_n, "Size")->required()->check(CLI::PositiveNumber);
  count_length->add_flag("--refined", refined, "Also split by number of asymmetric irreducible factors");

  std::string first, second;
  auto* factor = app.add_subcommand("factor", "Irreducible factorization");
  factor->add_option("composition", first)->required();
  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form");
  normalize_cmd->add_option("composition", first)->required();
  auto* equiv = app.add_subcommand("equiv", "Do two compositions give the same ribbon Schur function?");
  equiv->add_option("first", first)->required();
  equiv->add_option("second", second)->required();
  auto* klass = app.add_subcommand("class", "All compositions with the same ribbon Schur function");
  klass->add_option("composition", first)->required();

  int oracle_n = 0;
  auto* oracle = app.add_subcommand("oracle-check", "Cross-check normal forms against h-expansions");
  oracle->add_option("n", oracle_n, "Size")->required()->check(CLI::PositiveNumber);

  std::string bfile;
  auto* oeis = app.add_subcommand("oeis-compare", "Compare a b-file with computed values");
  oeis->add_option("bfile", bfile, "Path to b-file")->required();
  oeis->add_option("--variant", variant, "Sequence to compare against");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("ribbon");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*count)
      return runner.count(max_n, require_variant(variant), method == "brute" ? Method::brute : Method::formula);
    if (*count_length) return runner.count_length(length_n, refined);
    if (*factor) return runner.factor(parse_composition(first));
    if (*normalize_cmd) return runner.normalize_cmd(parse_composition(first));
    if (*equiv) return runner.equiv(parse_composition(first), parse_composition(second));
    if (*klass) return runner.klass(parse_composition(first));
    if (*oracle) return runner.oracle_check(oracle_n);
    if (*oeis) return runner.oeis_compare(bfile, require_variant(variant));
  } catch (const std::exception& e) {
    // Parse failures, malformed b-files and exceeded budgets are all usage errors.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ribbon::cli
