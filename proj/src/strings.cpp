#include "gk/strings.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "gk/error.hpp"

namespace gk {

namespace detail {

Triangle::Triangle(Rank rank, std::vector<int> values) : rank_(rank), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != rank.num_positive_roots())
    throw std::invalid_argument("triangle needs " + std::to_string(rank.num_positive_roots()) +
                                " entries, got " + std::to_string(values_.size()));
}

std::size_t Triangle::index(int j, int l) const {
  if (j < 1 || j > r() || l < 1 || l > j)
    throw std::out_of_range("triangle index (" + std::to_string(j) + "," + std::to_string(l) + ")");
  return static_cast<std::size_t>(j * (j - 1) / 2 + (l - 1));
}

}  // namespace detail

bool StringParam::circled(int j, int l) const {
  const int right = l < j ? (*this)(j, l + 1) : 0;
  return (*this)(j, l) == right;
}

int StringParam::num_circled() const {
  int n = 0;
  for (int j = 1; j <= r(); ++j)
    for (int l = 1; l <= j; ++l) n += circled(j, l) ? 1 : 0;
  return n;
}

LusztigDatum::LusztigDatum(Rank rank, std::vector<int> values) : Triangle(rank, std::move(values)) {
  if (std::any_of(this->values().begin(), this->values().end(), [](int c) { return c < 0; }))
    throw std::invalid_argument("Lusztig datum entries must be nonnegative");
}

StringParam bzl_path(const MLTableau& b, const LongWord& word) {
  if (word.rank() != b.rank()) throw std::invalid_argument("word and tableau ranks differ");
  std::vector<int> path;
  path.reserve(word.size());
  MLTableau cur = b;
  for (int letter : word.letters()) {
    int a = 0;
    while (auto next = e(cur, letter)) {
      cur = *std::move(next);
      ++a;
    }
    path.push_back(a);
  }
  if (cur != highest(b.rank())) throw std::logic_error("BZL path did not end at b_infinity");
  return StringParam(b.rank(), std::move(path));
}

StringParam bzl_path(const MLTableau& b) { return bzl_path(b, default_long_word(b.rank())); }

std::optional<MLTableau> apply_e_sequence(const MLTableau& b, std::span<const int> letters,
                                          std::span<const int> powers) {
  if (letters.size() != powers.size()) throw std::invalid_argument("letters/powers length mismatch");
  MLTableau cur = b;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    for (int m = 0; m < powers[k]; ++m) {
      auto next = e(cur, letters[k]);
      if (!next) return std::nullopt;
      cur = *std::move(next);
    }
  }
  return cur;
}

int nc(const StringParam& sp) { return sp.rank().num_positive_roots() - sp.num_circled(); }

int nz(const LusztigDatum& c) {
  return static_cast<int>(std::count_if(c.values().begin(), c.values().end(), [](int v) { return v != 0; }));
}

int num_zeros(const LusztigDatum& c) { return c.rank().num_positive_roots() - nz(c); }

bool in_string_cone(const StringParam& sp) {
  for (int j = 1; j <= sp.r(); ++j) {
    if (sp(j, j) < 0) return false;
    for (int l = 1; l < j; ++l)
      if (sp(j, l) < sp(j, l + 1)) return false;
  }
  return true;
}

LusztigDatum to_lusztig(const StringParam& sp) {
  if (!in_string_cone(sp))
    throw ConeViolation("not in the string cone: " + format_string_param(sp, false));
  LusztigDatum c(sp.rank());
  for (int j = 1; j <= sp.r(); ++j) {
    c(j, 1) = sp(j, j);
    for (int m = 2; m <= j; ++m) c(j, m) = sp(j, j - m + 1) - sp(j, j - m + 2);
  }
  return c;
}

StringParam from_lusztig(const LusztigDatum& c) {
  StringParam sp(c.rank());
  for (int j = 1; j <= c.r(); ++j) {
    int partial = 0;
    for (int m = 1; m <= j; ++m) {
      partial += c(j, m);
      sp(j, j - m + 1) = partial;
    }
  }
  return sp;
}

StringParam segment_triangle(const MLTableau& b) {
  StringParam sp(b.rank());
  for (int i = 1; i <= b.r(); ++i)
    for (int j = 1; j <= i; ++j) {
      int total = 0;
      for (int m = 1; m <= i - j + 1; ++m) total += b.count(m, i + 1);
      sp(i, j) = total;
    }
  return sp;
}

LusztigDatum tableau_to_lusztig(const MLTableau& b) {
  LusztigDatum c(b.rank());
  for (int i = 1; i <= b.r(); ++i)
    for (int m = 1; m <= i; ++m) c(i, m) = b.count(m, i + 1);
  return c;
}

MLTableau lusztig_to_tableau(const LusztigDatum& c) {
  MLTableau b(c.rank());
  for (int i = 1; i <= c.r(); ++i)
    for (int m = 1; m <= i; ++m) b.set_count(m, i + 1, c(i, m));
  return b;
}

namespace {

template <class Tri, class Decorate>
std::string format_triangle(const Tri& t, Decorate&& circled) {
  std::string out = "(";
  for (int j = 1; j <= t.r(); ++j) {
    if (j > 1) out += ';';
    for (int l = 1; l <= j; ++l) {
      if (l > 1) out += ',';
      const std::string v = std::to_string(t(j, l));
      out += circled(j, l) ? "(" + v + ")" : v;
    }
  }
  return out + ")";
}

struct ParsedEntry {
  int value;
  bool circled;
  std::size_t pos;
};

std::vector<std::vector<ParsedEntry>> parse_triangle(std::string_view text) {
  std::size_t p = 0;
  auto skip_ws = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (p >= text.size() || text[p] != ch)
      throw ParseError(std::string("expected '") + ch + "'", p);
    ++p;
  };
  auto number = [&]() -> int {
    skip_ws();
    const std::size_t start = p;
    if (p < text.size() && text[p] == '-') ++p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start || (p == start + 1 && text[start] == '-')) throw ParseError("expected an integer", start);
    if (p - start > 9) throw ParseError("integer too large", start);
    return std::stoi(std::string(text.substr(start, p - start)));
  };

  std::vector<std::vector<ParsedEntry>> rows(1);
  expect('(');
  for (;;) {
    skip_ws();
    const std::size_t pos = p;
    ParsedEntry entry{0, false, pos};
    if (p < text.size() && text[p] == '(') {
      ++p;
      entry.value = number();
      entry.circled = true;
      expect(')');
    } else {
      entry.value = number();
    }
    rows.back().push_back(entry);
    skip_ws();
    if (p >= text.size()) throw ParseError("unterminated triangle", p);
    if (text[p] == ',') {
      ++p;
    } else if (text[p] == ';') {
      ++p;
      rows.emplace_back();
    } else if (text[p] == ')') {
      ++p;
      break;
    } else {
      throw ParseError(std::string("unexpected character '") + text[p] + "'", p);
    }
  }
  skip_ws();
  if (p != text.size()) throw ParseError("trailing characters", p);
  for (std::size_t j = 0; j < rows.size(); ++j)
    if (rows[j].size() != j + 1)
      throw ParseError("row " + std::to_string(j + 1) + " must have " + std::to_string(j + 1) + " entries",
                       rows[j].front().pos);
  return rows;
}

}  // namespace

std::string format_string_param(const StringParam& sp, bool decorate) {
  return format_triangle(sp, [&](int j, int l) { return decorate && sp.circled(j, l); });
}

std::string format_lusztig(const LusztigDatum& c) {
  return format_triangle(c, [](int, int) { return false; });
}

StringParam parse_string_param(std::string_view text) {
  const auto rows = parse_triangle(text);
  StringParam sp{Rank(static_cast<int>(rows.size()))};
  for (int j = 1; j <= sp.r(); ++j)
    for (int l = 1; l <= j; ++l) sp(j, l) = rows[j - 1][l - 1].value;
  bool decorated = false;
  for (const auto& row : rows)
    for (const auto& entry : row) decorated = decorated || entry.circled;
  if (decorated)
    for (int j = 1; j <= sp.r(); ++j)
      for (int l = 1; l <= j; ++l)
        if (rows[j - 1][l - 1].circled != sp.circled(j, l))
          throw ParseError("circle decoration disagrees with the circling rule", rows[j - 1][l - 1].pos);
  return sp;
}

LusztigDatum parse_lusztig(std::string_view text) {
  const auto rows = parse_triangle(text);
  const Rank rank(static_cast<int>(rows.size()));
  std::vector<int> values;
  for (const auto& row : rows)
    for (const auto& entry : row) {
      if (entry.circled) throw ParseError("Lusztig data carry no decorations", entry.pos);
      if (entry.value < 0) throw ParseError("Lusztig data entries must be nonnegative", entry.pos);
      values.push_back(entry.value);
    }
  return LusztigDatum(rank, std::move(values));
}

}  // namespace gk
