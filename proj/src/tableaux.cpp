#include "gk/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "gk/error.hpp"

namespace gk {

MLTableau::MLTableau(Rank rank) : rank_(rank), counts_(rank.num_positive_roots(), 0) {}

std::size_t MLTableau::index(int j, int k) const {
  const int r = rank_.value();
  if (j < 1 || j > r || k <= j || k > r + 1)
    throw std::out_of_range("count index (" + std::to_string(j) + "," + std::to_string(k) +
                            ") outside 1 <= j < k <= r+1");
  const int offset = (j - 1) * (r + 1) - (j - 1) * j / 2;
  return static_cast<std::size_t>(offset + (k - j - 1));
}

void MLTableau::set_count(int j, int k, int value) {
  if (value < 0) throw std::invalid_argument("tableau counts must be nonnegative");
  counts_.at(index(j, k)) = value;
}

MLTableau MLTableau::with_count(int j, int k, int value) const {
  MLTableau out = *this;
  out.set_count(j, k, value);
  return out;
}

int MLTableau::variable_length(int j) const {
  int total = 0;
  for (int k = j + 1; k <= r() + 1; ++k) total += count(j, k);
  return total;
}

int MLTableau::row_length(int j) const {
  if (j == r() + 1) return 0;
  int length = 0;
  for (int row = r(); row >= j; --row) length = length + 1 + variable_length(row);
  return length;
}

MLTableau highest(Rank rank) { return MLTableau(rank); }

bool CanonicalLess::operator()(const MLTableau& lhs, const MLTableau& rhs) const {
  const RootVector wl = weight_neg(lhs);
  const RootVector wr = weight_neg(rhs);
  if (wl != wr) return GradedLess{}(wl, wr);
  return lhs.counts() < rhs.counts();
}

std::size_t MLTableauHash::operator()(const MLTableau& b) const noexcept {
  std::size_t h = static_cast<std::size_t>(b.r());
  for (int c : b.counts()) h = h * 1000003u ^ static_cast<std::size_t>(c);
  return h;
}

bool is_semistandard(const FullTableau& t) {
  for (std::size_t j = 0; j < t.rows.size(); ++j) {
    const auto& row = t.rows[j];
    if (!std::is_sorted(row.begin(), row.end())) return false;
    if (j == 0) continue;
    const auto& above = t.rows[j - 1];
    if (row.size() > above.size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] <= above[c]) return false;
  }
  return true;
}

bool in_t_infinity(const FullTableau& t, Rank rank) {
  const int r = rank.value();
  if (static_cast<int>(t.rows.size()) != r) return false;
  for (int j = 1; j <= r; ++j) {
    const auto& row = t.rows[j - 1];
    if (row.empty() || row.front() != j) return false;
    for (int letter : row)
      if (letter < 1 || letter > r + 1) return false;
  }
  if (!is_semistandard(t)) return false;
  for (int j = 1; j <= r; ++j) {
    const auto& row = t.rows[j - 1];
    const auto own = std::count(row.begin(), row.end(), j);
    const std::size_t below = j < r ? t.rows[j].size() : 0;
    if (static_cast<std::size_t>(own) != below + 1) return false;
  }
  return true;
}

FullTableau materialize(const MLTableau& b) {
  const int r = b.r();
  FullTableau t;
  t.rows.resize(r);
  std::size_t below = 0;
  for (int j = r; j >= 1; --j) {
    auto& row = t.rows[j - 1];
    row.assign(below + 1, j);
    for (int k = j + 1; k <= r + 1; ++k) row.insert(row.end(), b.count(j, k), k);
    below = row.size();
  }
  return t;
}

MLTableau reduce(const FullTableau& t, Rank rank) {
  if (!in_t_infinity(t, rank))
    throw std::invalid_argument("tableau is not a marginally large element of T(infinity)");
  MLTableau b(rank);
  for (int j = 1; j <= rank.value(); ++j)
    for (int letter : t.rows[j - 1])
      if (letter > j) b.set_count(j, letter, b.count(j, letter) + 1);
  return b;
}

BoxWord reading_word(const FullTableau& t) {
  std::size_t width = 0;
  for (const auto& row : t.rows) width = std::max(width, row.size());
  BoxWord word;
  for (std::size_t c = width; c-- > 0;)
    for (std::size_t j = 0; j < t.rows.size(); ++j)
      if (c < t.rows[j].size())
        word.push_back({t.rows[j][c], static_cast<int>(j + 1), static_cast<int>(c + 1)});
  return word;
}

Signature signature(const BoxWord& word, int i) {
  Signature sig;
  sig.raw.reserve(word.size());
  for (const Box& box : word) sig.raw.push_back(box.letter == i ? 1 : box.letter == i + 1 ? -1 : 0);
  sig.reduced = sig.raw;

  std::vector<std::size_t> open_plus;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (sig.raw[p] == 1) {
      open_plus.push_back(p);
    } else if (sig.raw[p] == -1 && !open_plus.empty()) {
      sig.reduced[open_plus.back()] = 0;
      sig.reduced[p] = 0;
      open_plus.pop_back();
    }
  }
  for (std::size_t p = 0; p < word.size(); ++p)
    if (sig.reduced[p] == -1) sig.e_target = p;
  if (!open_plus.empty()) sig.f_target = open_plus.front();
  return sig;
}

TableauSignature i_signature(const MLTableau& b, int i) {
  if (i < 1 || i > b.r()) throw std::out_of_range("simple index out of range");
  TableauSignature out;
  out.word = reading_word(materialize(b));
  out.sig = signature(out.word, i);
  return out;
}

std::optional<FullTableau> f_tilde_fixed_shape(const FullTableau& t, int i) {
  const BoxWord word = reading_word(t);
  const Signature sig = signature(word, i);
  if (!sig.f_target) return std::nullopt;
  const Box& box = word[*sig.f_target];
  FullTableau out = t;
  out.rows[box.row - 1][box.col - 1] = i + 1;
  return out;
}

std::optional<FullTableau> e_tilde_fixed_shape(const FullTableau& t, int i) {
  const BoxWord word = reading_word(t);
  const Signature sig = signature(word, i);
  if (!sig.e_target) return std::nullopt;
  const Box& box = word[*sig.e_target];
  FullTableau out = t;
  out.rows[box.row - 1][box.col - 1] = i;
  return out;
}

FullTableau f_procedure(const FullTableau& t, int i, Rank rank) {
  if (i < 1 || i > rank.value()) throw std::out_of_range("simple index out of range");
  const BoxWord word = reading_word(t);
  const Signature sig = signature(word, i);
  if (!sig.f_target) throw std::logic_error("f_i has no target on an element of T(infinity)");
  const Box box = word[*sig.f_target];

  FullTableau out = t;
  out.rows[box.row - 1][box.col - 1] = i + 1;
  if (in_t_infinity(out, rank)) return out;

  if (box.row != i) throw std::logic_error("f_i broke marginal largeness away from row i");
  for (int k = 1; k <= i; ++k) {
    auto& row = out.rows[k - 1];
    row.insert(row.begin() + (box.col - 1), k);
  }
  if (!in_t_infinity(out, rank)) throw std::logic_error("column insertion did not restore T(infinity)");
  return out;
}

std::optional<FullTableau> e_procedure(const FullTableau& t, int i, Rank rank) {
  if (i < 1 || i > rank.value()) throw std::out_of_range("simple index out of range");
  const BoxWord word = reading_word(t);
  const Signature sig = signature(word, i);
  if (!sig.e_target) return std::nullopt;
  const Box box = word[*sig.e_target];

  FullTableau out = t;
  out.rows[box.row - 1][box.col - 1] = i;
  if (in_t_infinity(out, rank)) return out;

  if (box.row != i) throw std::logic_error("e_i broke marginal largeness away from row i");
  for (int k = 1; k <= i; ++k) {
    auto& row = out.rows[k - 1];
    if (row.at(box.col - 1) != k) throw std::logic_error("removed column is not 1..i");
    row.erase(row.begin() + (box.col - 1));
  }
  if (!in_t_infinity(out, rank)) throw std::logic_error("column removal did not restore T(infinity)");
  return out;
}

namespace {

// Boxes with letters i or i+1, in reading order, computed from the counts.
BoxWord relevant_boxes(const MLTableau& b, int i) {
  const int r = b.r();
  std::vector<int> length(r + 2, 0);
  for (int j = r; j >= 1; --j) length[j] = length[j + 1] + 1 + b.variable_length(j);

  BoxWord boxes;
  auto emit = [&](int letter, int row, int first_col, int n) {
    for (int c = first_col; c < first_col + n; ++c) boxes.push_back({letter, row, c});
  };
  for (int j = 1; j <= std::min(i + 1, r); ++j) {
    const int required = length[j + 1] + 1;
    if (j == i || j == i + 1) emit(j, j, 1, required);
    int col = required + 1;
    for (int k = j + 1; k <= r + 1; ++k) {
      const int n = b.count(j, k);
      if (k == i || k == i + 1) emit(k, j, col, n);
      col += n;
    }
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& x, const Box& y) {
    return x.col != y.col ? x.col > y.col : x.row < y.row;
  });
  return boxes;
}

}  // namespace

MLTableau f(const MLTableau& b, int i) {
  if (i < 1 || i > b.r()) throw std::out_of_range("simple index out of range");
  const BoxWord boxes = relevant_boxes(b, i);
  const Signature sig = signature(boxes, i);
  if (!sig.f_target) throw std::logic_error("f_i has no target on an element of T(infinity)");
  const Box& box = boxes[*sig.f_target];

  MLTableau out = b;
  if (box.row < i) out.set_count(box.row, i, out.count(box.row, i) - 1);
  out.set_count(box.row, i + 1, out.count(box.row, i + 1) + 1);
  return out;
}

std::optional<MLTableau> e(const MLTableau& b, int i) {
  if (i < 1 || i > b.r()) throw std::out_of_range("simple index out of range");
  const BoxWord boxes = relevant_boxes(b, i);
  const Signature sig = signature(boxes, i);
  if (!sig.e_target) return std::nullopt;
  const Box& box = boxes[*sig.e_target];
  if (box.row > i) throw std::logic_error("e_i targeted a required box");

  MLTableau out = b;
  out.set_count(box.row, i + 1, out.count(box.row, i + 1) - 1);
  if (box.row < i) out.set_count(box.row, i, out.count(box.row, i) + 1);
  return out;
}

int e_string_length(const MLTableau& b, int i) {
  int m = 0;
  std::optional<MLTableau> cur = e(b, i);
  while (cur) {
    ++m;
    cur = e(*cur, i);
  }
  return m;
}

RootVector weight_neg(const MLTableau& b) {
  RootVector w(b.rank());
  for (int j = 1; j <= b.r(); ++j)
    for (int k = j + 1; k <= b.r() + 1; ++k)
      if (const int n = b.count(j, k); n > 0) w.add({j, k - 1}, n);
  return w;
}

int seg_k(const MLTableau& b, int k) {
  if (k < 2 || k > b.r() + 1) throw std::out_of_range("segment letter outside 2..r+1");
  int n = 0;
  for (int j = 1; j < k; ++j) n += b.count(j, k) > 0 ? 1 : 0;
  return n;
}

int seg(const MLTableau& b) {
  int n = 0;
  for (int k = 2; k <= b.r() + 1; ++k) n += seg_k(b, k);
  return n;
}

int segment_boxes(const MLTableau& b, int k) {
  if (k < 2 || k > b.r() + 1) throw std::out_of_range("segment letter outside 2..r+1");
  int n = 0;
  for (int j = 1; j < k; ++j) n += b.count(j, k);
  return n;
}

namespace {

struct Token {
  std::string text;  // "*" or digits
  std::size_t pos;
};

using Row = std::vector<Token>;

std::vector<std::pair<Row, std::size_t>> tokenize(std::string_view text) {
  std::vector<std::pair<Row, std::size_t>> rows;
  Row row;
  std::size_t row_start = 0;
  bool expect_item = true;
  std::size_t p = 0;
  auto finish_row = [&](std::size_t at) {
    if (expect_item) throw ParseError("empty row entry", at);
    rows.emplace_back(std::move(row), row_start);
    row.clear();
  };
  while (p < text.size()) {
    const char ch = text[p];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++p;
    } else if (ch == '/') {
      finish_row(p);
      expect_item = true;
      row_start = ++p;
    } else if (ch == ',') {
      if (expect_item) throw ParseError("unexpected ','", p);
      expect_item = true;
      ++p;
    } else if (ch == '*' || std::isdigit(static_cast<unsigned char>(ch))) {
      if (!expect_item) throw ParseError("missing ',' between entries", p);
      Token tok{std::string(1, ch), p++};
      if (ch != '*')
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
          tok.text.push_back(text[p++]);
      row.push_back(std::move(tok));
      expect_item = false;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", p);
    }
  }
  finish_row(p);
  return rows;
}

int letter_of(const Token& tok) {
  if (tok.text.size() > 6) throw ParseError("letter too large", tok.pos);
  return std::stoi(tok.text);
}

}  // namespace

MLTableau parse_tableau(std::string_view text, TableauMode mode) {
  const auto rows = tokenize(text);
  const Rank rank(static_cast<int>(rows.size()));
  const int r = rank.value();

  if (mode == TableauMode::automatic) {
    bool full = true;
    for (int j = 1; j <= r && full; ++j) {
      const Token& first = rows[j - 1].first.front();
      full = first.text != "*" && letter_of(first) == j;
    }
    mode = full ? TableauMode::full : TableauMode::reduced;
  }

  if (mode == TableauMode::reduced) {
    MLTableau b(rank);
    for (int j = 1; j <= r; ++j) {
      const Row& row = rows[j - 1].first;
      if (row.size() == 1 && row.front().text == "*") continue;
      int prev = j + 1;
      for (const Token& tok : row) {
        if (tok.text == "*") throw ParseError("'*' must stand alone in its row", tok.pos);
        const int k = letter_of(tok);
        if (k <= j || k > r + 1)
          throw ParseError("letter " + tok.text + " cannot appear in reduced row " + std::to_string(j),
                           tok.pos);
        if (k < prev) throw ParseError("row is not weakly increasing", tok.pos);
        prev = k;
        b.set_count(j, k, b.count(j, k) + 1);
      }
    }
    return b;
  }

  FullTableau t;
  for (const auto& [row, start] : rows) {
    std::vector<int> letters;
    for (const Token& tok : row) {
      if (tok.text == "*") throw ParseError("'*' is only allowed in reduced mode", tok.pos);
      const int k = letter_of(tok);
      if (k < 1 || k > r + 1) throw ParseError("letter " + tok.text + " outside 1..r+1", tok.pos);
      letters.push_back(k);
    }
    t.rows.push_back(std::move(letters));
  }
  if (!is_semistandard(t)) throw ParseError("tableau is not semistandard", 0);
  for (int j = 1; j <= r; ++j)
    if (t.rows[j - 1].front() != j)
      throw ParseError("row " + std::to_string(j) + " must start with " + std::to_string(j),
                       rows[j - 1].second);
  if (!in_t_infinity(t, rank)) throw ParseError("tableau is not marginally large", 0);
  return reduce(t, rank);
}

namespace {

std::string join_row(const std::vector<int>& row) {
  std::string out;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (c) out += ',';
    out += std::to_string(row[c]);
  }
  return out;
}

}  // namespace

std::string format_full(const FullTableau& t) {
  std::string out;
  for (std::size_t j = 0; j < t.rows.size(); ++j) {
    if (j) out += '/';
    out += t.rows[j].empty() ? "*" : join_row(t.rows[j]);
  }
  return out;
}

std::string format_tableau(const MLTableau& b, TableauMode mode) {
  if (mode == TableauMode::full) return format_full(materialize(b));
  FullTableau reduced;
  for (int j = 1; j <= b.r(); ++j) {
    std::vector<int> row;
    for (int k = j + 1; k <= b.r() + 1; ++k) row.insert(row.end(), b.count(j, k), k);
    reduced.rows.push_back(std::move(row));
  }
  return format_full(reduced);
}

}  // namespace gk
