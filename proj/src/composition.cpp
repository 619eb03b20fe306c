#include "ribbon/composition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace ribbon {
namespace {

Part checked_add(Part a, Part b) {
  Part r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("composition part overflow");
  return r;
}

Part checked_mul(Part a, Part b) {
  Part r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("composition part overflow");
  return r;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

Composition::Composition(std::initializer_list<Part> parts)
    : Composition(std::vector<Part>(parts)) {}

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must be nonempty");
  for (Part p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    size_ = checked_add(size_, p);
  }
}

Composition Composition::single(Part n) { return Composition({n}); }

Composition Composition::ones(std::size_t n) {
  return Composition(std::vector<Part>(n, 1));
}

std::strong_ordering Composition::operator<=>(const Composition& other) const {
  return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                other.parts_.begin(),
                                                other.parts_.end());
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

Composition concatenate(const Composition& a, const Composition& b) {
  std::vector<Part> out(a.parts().begin(), a.parts().end());
  out.insert(out.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(out));
}

Composition near_concatenate(const Composition& a, const Composition& b) {
  std::vector<Part> out(a.parts().begin(), a.parts().end());
  out.back() = checked_add(out.back(), b.front());
  out.insert(out.end(), b.parts().begin() + 1, b.parts().end());
  return Composition(std::move(out));
}

namespace {

// Appends b^{(.)n} to out.
void append_odot_power(std::vector<Part>& out, std::span<const Part> b, Part n) {
  const std::size_t t = b.size();
  if (t == 1) {
    out.push_back(checked_mul(b[0], n));
    return;
  }
  const Part joint = checked_add(b[t - 1], b[0]);
  out.insert(out.end(), b.begin(), b.end() - 1);
  for (Part copy = 1; copy < n; ++copy) {
    out.push_back(joint);
    out.insert(out.end(), b.begin() + 1, b.end() - 1);
  }
  out.push_back(b[t - 1]);
}

}  // namespace

Composition odot_power(const Composition& a, Part n) {
  if (n < 1) throw std::invalid_argument("odot_power requires n >= 1");
  std::vector<Part> out;
  append_odot_power(out, a.parts(), n);
  return Composition(std::move(out));
}

Composition compose(const Composition& a, const Composition& b) {
  std::vector<Part> out;
  const auto bl = static_cast<Part>(b.length());
  out.reserve(static_cast<std::size_t>(
      static_cast<Part>(a.length()) + a.size() * (bl - 1)));
  for (Part ai : a.parts()) append_odot_power(out, b.parts(), ai);
  return Composition(std::move(out));
}

Composition reverse(const Composition& a) {
  std::vector<Part> out(a.parts().rbegin(), a.parts().rend());
  return Composition(std::move(out));
}

bool is_symmetric(const Composition& a) {
  const auto p = a.parts();
  return std::equal(p.begin(), p.begin() + p.size() / 2, p.rbegin());
}

Composition lex_min_form(const Composition& a) {
  Composition r = reverse(a);
  return r < a ? r : a;
}

Composition from_cut_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > 64) throw std::invalid_argument("from_cut_mask: n out of range");
  std::vector<Part> parts;
  Part run = 1;
  for (int i = 0; i + 1 < n; ++i) {
    if (mask >> i & 1u) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

std::uint64_t cut_mask(const Composition& a) {
  if (a.size() > 64) throw std::invalid_argument("cut_mask: size exceeds 64");
  std::uint64_t mask = 0;
  Part pos = 0;
  for (std::size_t i = 0; i + 1 < a.length(); ++i) {
    pos += a[i];
    mask |= std::uint64_t{1} << (pos - 1);
  }
  return mask;
}

void for_each_composition(int n, const std::function<void(const Composition&)>& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_compositions requires n >= 1");
  if (n > 63) throw std::invalid_argument("enumerate_compositions: n too large");
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < count; ++mask) visit(from_cut_mask(n, mask));
}

std::vector<Composition> enumerate_compositions(int n) {
  std::vector<Composition> out;
  for_each_composition(n, [&](const Composition& c) { out.push_back(c); });
  return out;
}

Composition parse_composition(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ParseError("unbalanced parenthesis in '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) throw ParseError("empty composition");
  std::vector<Part> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string_view token =
        trim(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    Part value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("invalid token '" + std::string(token) + "'");
    if (value < 1) throw ParseError("nonpositive part '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Composition(std::move(parts));
}

}  // namespace ribbon

std::size_t std::hash<ribbon::Composition>::operator()(const ribbon::Composition& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto p : c.parts()) {
    h ^= static_cast<std::size_t>(p);
    h *= 0x100000001b3ull;
  }
  return h;
}
