#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ribbon {

/// OEIS b-file: lines "n a(n)", '#' comments, blank lines ignored, indices
/// strictly increasing.
struct BFile {
  std::string source;
  std::vector<std::pair<long, mpz_class>> entries;
};

class BFileError : public std::runtime_error {
 public:
  BFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

BFile parse_bfile(std::istream& in, std::string source = {});
BFile read_bfile(const std::string& path);
void write_bfile(std::ostream& out, const BFile& file);

struct BFileDiff {
  long n;
  mpz_class file_value;
  mpz_class computed;
};

/// Entries whose value differs from computed[n - 1]. Indices beyond
/// `computed` are an error.
std::vector<BFileDiff> compare_bfile(const BFile& file, const std::vector<mpz_class>& computed);

}  // namespace ribbon
