#include "gk/mvquiver.hpp"

#include <cctype>
#include <stdexcept>

#include "gk/error.hpp"

namespace gk {

int MVPathDatum::num_edges() const {
  int n = 0;
  for (const PathStep& s : steps) n += s.length > 0 ? 1 : 0;
  return n;
}

namespace {

void require_same_rank(Rank a, Rank b) {
  if (a != b) throw std::invalid_argument("datum and word ranks differ");
}

SignedRootVector signed_root(Rank rank, Interval root) { return RootVector::of(rank, root).as_signed(); }

}  // namespace

MVPathDatum lusztig_to_path(const LusztigDatum& c, const LongWord& word) {
  require_same_rank(c.rank(), word.rank());
  MVPathDatum path;
  path.vertices.emplace_back(c.rank());
  const auto roots = word.roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const int length = c.values()[k];
    path.steps.push_back({roots[k], length});
    path.vertices.push_back(path.vertices.back() + length * signed_root(c.rank(), roots[k]));
  }
  return path;
}

int QuiverDecomposition::multiplicity(Interval v) const {
  auto it = summands_.find(v);
  return it == summands_.end() ? 0 : it->second;
}

void QuiverDecomposition::add(Interval v, int multiplicity) {
  if (v.a < 1 || v.b > rank_.value() || v.a > v.b)
    throw std::out_of_range("indecomposable " + to_string(v) + " outside the quiver");
  if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
  if (multiplicity == 0) return;
  summands_[v] += multiplicity;
}

QuiverDecomposition lusztig_to_quiver(const LusztigDatum& c, const LongWord& word) {
  require_same_rank(c.rank(), word.rank());
  QuiverDecomposition d(c.rank());
  const auto roots = word.roots();
  for (std::size_t k = 0; k < roots.size(); ++k) d.add(roots[k], c.values()[k]);
  return d;
}

LusztigDatum quiver_to_lusztig(const QuiverDecomposition& d, const LongWord& word) {
  require_same_rank(d.rank(), word.rank());
  std::vector<int> values;
  for (Interval root : word.roots()) values.push_back(d.multiplicity(root));
  return LusztigDatum(d.rank(), std::move(values));
}

int gamma(const QuiverDecomposition& d) { return static_cast<int>(d.summands().size()); }

RootVector dim_vector(const QuiverDecomposition& d) {
  RootVector dim(d.rank());
  for (const auto& [v, m] : d.summands()) dim.add(v, m);
  return dim;
}

std::string format_decomposition(const QuiverDecomposition& d) {
  std::string out;
  for (const auto& [v, m] : d.summands()) {
    if (!out.empty()) out += ' ';
    out += to_string(v) + "×" + std::to_string(m);
  }
  return out;
}

QuiverDecomposition parse_decomposition(Rank rank, std::string_view text) {
  QuiverDecomposition d(rank);
  std::size_t p = 0;
  auto skip_ws = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  auto number = [&] {
    const std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start || p - start > 9) throw ParseError("expected a number", start);
    return std::stoi(std::string(text.substr(start, p - start)));
  };
  auto expect = [&](std::string_view token) {
    if (text.substr(p, token.size()) != token)
      throw ParseError("expected '" + std::string(token) + "'", p);
    p += token.size();
  };
  skip_ws();
  while (p < text.size()) {
    const std::size_t start = p;
    expect("[");
    const int a = number();
    expect(",");
    const int b = number();
    expect("]");
    if (text.substr(p, 2) == "×") p += 2;
    else expect("x");
    const int m = number();
    if (a < 1 || b > rank.value() || a > b) throw ParseError("interval outside the quiver", start);
    if (d.multiplicity({a, b}) != 0) throw ParseError("repeated indecomposable", start);
    d.add({a, b}, m);
    skip_ws();
  }
  return d;
}

std::string format_vertex(const SignedRootVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v.coeffs()[i]);
  }
  return out + ")";
}

namespace {

// Visits every multiplicity vector over `heights` with weighted sum <= budget.
template <class Visit>
void for_each_multiplicity(const std::vector<int>& heights, std::vector<int>& mult, std::size_t idx,
                           int budget, Visit& visit) {
  if (idx == heights.size()) {
    visit(mult);
    return;
  }
  for (int m = 0; m * heights[idx] <= budget; ++m) {
    mult[idx] = m;
    for_each_multiplicity(heights, mult, idx + 1, budget - m * heights[idx], visit);
  }
  mult[idx] = 0;
}

}  // namespace

TruncatedSeries quiver_side(Rank rank, int cap) {
  const auto roots = positive_roots(rank);
  std::vector<int> heights;
  for (Interval v : roots) heights.push_back(v.height());
  std::vector<int> mult(roots.size(), 0);
  TruncatedSeries s(rank, cap);
  auto visit = [&](const std::vector<int>& m) {
    QuiverDecomposition d(rank);
    for (std::size_t k = 0; k < roots.size(); ++k) d.add(roots[k], m[k]);
    s.add_term(dim_vector(d), UPoly::one_minus_u_pow(gamma(d)));
  };
  for_each_multiplicity(heights, mult, 0, cap, visit);
  return s;
}

TruncatedSeries mv_side(const LongWord& word, int cap) {
  const Rank rank = word.rank();
  std::vector<int> heights;
  for (Interval v : word.roots()) heights.push_back(v.height());
  std::vector<int> mult(heights.size(), 0);
  TruncatedSeries s(rank, cap);
  auto visit = [&](const std::vector<int>& c) {
    const MVPathDatum path = lusztig_to_path(LusztigDatum(rank, c), word);
    s.add_term(RootVector(path.vertices.back().coeffs()), UPoly::one_minus_u_pow(path.num_edges()));
  };
  for_each_multiplicity(heights, mult, 0, cap, visit);
  return s;
}

}  // namespace gk
