#include "ribbon/bfile.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ribbon {

BFile parse_bfile(std::istream& in, std::string source) {
  BFile file{std::move(source), {}};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_tok, value_tok, extra;
    fields >> index_tok >> value_tok;
    if (value_tok.empty()) throw BFileError(lineno, "expected 'n value'");
    if (fields >> extra) throw BFileError(lineno, "unexpected trailing field '" + extra + "'");
    long n = 0;
    std::size_t used = 0;
    try {
      n = std::stol(index_tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != index_tok.size()) throw BFileError(lineno, "invalid index '" + index_tok + "'");
    mpz_class value;
    if (value.set_str(value_tok, 10) != 0) throw BFileError(lineno, "invalid value '" + value_tok + "'");
    if (!file.entries.empty() && n <= file.entries.back().first)
      throw BFileError(lineno, "index " + std::to_string(n) + " is not increasing");
    file.entries.emplace_back(n, std::move(value));
  }
  return file;
}

BFile read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open b-file '" + path + "'");
  return parse_bfile(in, path);
}

void write_bfile(std::ostream& out, const BFile& file) {
  if (!file.source.empty()) out << "# " << file.source << '\n';
  for (const auto& [n, v] : file.entries) out << n << ' ' << v.get_str() << '\n';
}

std::vector<BFileDiff> compare_bfile(const BFile& file, const std::vector<mpz_class>& computed) {
  std::vector<BFileDiff> diffs;
  for (const auto& [n, v] : file.entries) {
    if (n < 1 || static_cast<std::size_t>(n) > computed.size())
      throw std::out_of_range("b-file index " + std::to_string(n) + " outside computed range");
    const mpz_class& c = computed[static_cast<std::size_t>(n - 1)];
    if (c != v) diffs.push_back({n, v, c});
  }
  return diffs;
}

}  // namespace ribbon
