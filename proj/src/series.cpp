#include "gk/series.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "gk/error.hpp"
#include "json.hpp"

namespace gk {

UPoly::UPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UPoly UPoly::constant(Integer c) { return UPoly(std::vector<Integer>{std::move(c)}); }

UPoly UPoly::one_minus_u_pow(int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  // Binomial row with alternating signs.
  std::vector<Integer> c(k + 1);
  Integer binom = 1;
  for (int d = 0; d <= k; ++d) {
    c[d] = (d % 2 == 0) ? binom : Integer(-binom);
    binom = binom * (k - d) / (d + 1);
  }
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  trim();
  return *this;
}

UPoly operator*(const UPoly& lhs, const UPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t a = 0; a < lhs.coeffs_.size(); ++a)
    for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
  return UPoly(std::move(out));
}

Integer UPoly::evaluate(const Integer& u) const {
  Integer acc = 0;
  for (std::size_t d = coeffs_.size(); d-- > 0;) acc = acc * u + coeffs_[d];
  return acc;
}

std::vector<Integer> UPoly::in_one_minus_u_basis() const {
  // Horner in v = 1 - u: p = c_0 + u (c_1 + u (...)), with u = 1 - v.
  std::vector<Integer> acc;  // coefficients in v
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    std::vector<Integer> next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += acc[k];
      next[k + 1] -= acc[k];
    }
    next[0] += coeffs_[d];
    acc = std::move(next);
  }
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

std::string to_string(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
    if (d) out += ',';
    out += p.coeffs()[d].str();
  }
  return out;
}

TruncatedSeries::TruncatedSeries(Rank rank, int cap) : rank_(rank), cap_(cap) {
  if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
}

TruncatedSeries TruncatedSeries::one(Rank rank, int cap) {
  TruncatedSeries s(rank, cap);
  s.add_term(RootVector(rank), UPoly{1});
  return s;
}

void TruncatedSeries::add_term(const RootVector& exponent, const UPoly& poly) {
  if (static_cast<int>(exponent.size()) != rank_.value())
    throw std::invalid_argument("exponent length does not match the rank");
  if (height(exponent) > cap_ || poly.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, poly);
  if (!inserted) {
    it->second += poly;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UPoly TruncatedSeries::coefficient(const RootVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? UPoly{} : it->second;
}

namespace {

void require_compatible(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (lhs.cap() != rhs.cap())
    throw CapMismatch("series caps differ: " + std::to_string(lhs.cap()) + " vs " +
                      std::to_string(rhs.cap()));
  if (lhs.rank() != rhs.rank())
    throw CapMismatch("series ranks differ: " + std::to_string(lhs.rank().value()) + " vs " +
                      std::to_string(rhs.rank().value()));
}

}  // namespace

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  require_compatible(lhs, rhs);
  TruncatedSeries out(lhs.rank(), lhs.cap());
  for (const auto& [ea, pa] : lhs.terms_) {
    const int ha = height(ea);
    for (const auto& [eb, pb] : rhs.terms_) {
      if (ha + height(eb) > out.cap_) continue;
      out.add_term(ea + eb, pa * pb);
    }
  }
  return out;
}

std::map<RootVector, Integer, GradedLess> TruncatedSeries::evaluate(const Integer& u) const {
  std::map<RootVector, Integer, GradedLess> out;
  for (const auto& [exponent, poly] : terms_)
    if (Integer v = poly.evaluate(u); v != 0) out.emplace(exponent, std::move(v));
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return rank_ == other.rank_ && cap_ == other.cap_ && terms_ == other.terms_;
}

TruncatedSeries product_side(Rank rank, int cap) {
  TruncatedSeries acc = TruncatedSeries::one(rank, cap);
  const UPoly one_minus_u{1, -1};
  for (Interval alpha : positive_roots(rank)) {
    TruncatedSeries factor = TruncatedSeries::one(rank, cap);
    for (int m = 1; m * alpha.height() <= cap; ++m) {
      RootVector exponent(rank);
      exponent.add(alpha, m);
      factor.add_term(exponent, one_minus_u);
    }
    acc = acc * factor;
  }
  return acc;
}

namespace {

std::vector<MLTableau> enumerate_bfs(Rank rank, int cap) {
  std::vector<MLTableau> all{highest(rank)};
  std::vector<MLTableau> level = all;
  for (int depth = 1; depth <= cap; ++depth) {
    std::unordered_set<MLTableau, MLTableauHash> seen;
    std::vector<MLTableau> next;
    for (const MLTableau& b : level)
      for (int i = 1; i <= rank.value(); ++i) {
        MLTableau child = f(b, i);
        if (seen.insert(child).second) next.push_back(std::move(child));
      }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

void enumerate_counts(MLTableau& cur, int j, int k, int budget, std::vector<MLTableau>& out) {
  const int r = cur.r();
  if (j > r) {
    out.push_back(cur);
    return;
  }
  const int next_j = k == r + 1 ? j + 1 : j;
  const int next_k = k == r + 1 ? j + 2 : k + 1;
  const int cost = k - j;
  for (int n = 0; n * cost <= budget; ++n) {
    cur.set_count(j, k, n);
    enumerate_counts(cur, next_j, next_k, budget - n * cost, out);
  }
  cur.set_count(j, k, 0);
}

}  // namespace

std::vector<MLTableau> enumerate_crystal(Rank rank, int cap, Strategy strategy) {
  if (cap < 0) throw std::invalid_argument("enumeration cap must be nonnegative");
  std::vector<MLTableau> out;
  if (strategy == Strategy::bfs) {
    out = enumerate_bfs(rank, cap);
  } else {
    MLTableau cur(rank);
    enumerate_counts(cur, 1, 2, cap, out);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

TruncatedSeries sum_side(Rank rank, int cap, Strategy strategy) {
  TruncatedSeries s(rank, cap);
  for (const MLTableau& b : enumerate_crystal(rank, cap, strategy))
    s.add_term(weight_neg(b), UPoly::one_minus_u_pow(seg(b)));
  return s;
}

CompareReport compare(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  require_compatible(lhs, rhs);
  std::map<RootVector, int, GradedLess> exponents;
  for (const auto& term : lhs.terms()) exponents.emplace(term.first, 0);
  for (const auto& term : rhs.terms()) exponents.emplace(term.first, 0);
  CompareReport report;
  for (const auto& [exponent, unused] : exponents) {
    UPoly a = lhs.coefficient(exponent);
    UPoly b = rhs.coefficient(exponent);
    if (a != b) report.mismatches.push_back({exponent, std::move(a), std::move(b)});
  }
  return report;
}

namespace {

struct KostantMemo {
  const std::vector<RootVector>& roots;
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> cache;

  Integer count(std::size_t idx, const RootVector& rest) {
    if (height(rest) == 0) return 1;
    if (idx == roots.size()) return 0;
    auto key = std::make_pair(idx, rest.coeffs());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    Integer total = 0;
    RootVector remaining = rest;
    for (;;) {
      total += count(idx + 1, remaining);
      if (!remaining.dominates(roots[idx])) break;
      remaining = remaining.minus(roots[idx]);
    }
    cache.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

Integer kostant(Rank rank, const RootVector& weight) {
  if (static_cast<int>(weight.size()) != rank.value())
    throw std::invalid_argument("weight length does not match the rank");
  std::vector<RootVector> roots;
  for (Interval alpha : positive_roots(rank)) roots.push_back(RootVector::of(rank, alpha));
  KostantMemo memo{roots, {}};
  return memo.count(0, weight);
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t p = s.find(sep, start);
    out.emplace_back(s.substr(start, p == std::string_view::npos ? p : p - start));
    if (p == std::string_view::npos) return out;
    start = p + 1;
  }
}

}  // namespace

std::string to_tsv(const TruncatedSeries& s) {
  std::string out = "# rank=" + std::to_string(s.rank().value()) + " cap=" + std::to_string(s.cap()) + "\n";
  for (const auto& [exponent, poly] : s.terms()) out += join(exponent.coeffs()) + "\t" + to_string(poly) + "\n";
  return out;
}

TruncatedSeries from_tsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  int rank = 0, cap = -1;
  if (!std::getline(in, line) || std::sscanf(line.c_str(), "# rank=%d cap=%d", &rank, &cap) != 2)
    throw ParseError("missing '# rank=R cap=D' header", 0);
  offset += line.size() + 1;
  TruncatedSeries s(Rank(rank), cap);
  while (std::getline(in, line)) {
    if (line.empty()) {
      offset += 1;
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != 2) throw ParseError("expected exponent<TAB>coefficients", offset);
    std::vector<int> coords;
    try {
      for (const auto& c : split(fields[0], ',')) coords.push_back(std::stoi(c));
      std::vector<Integer> coeffs;
      for (const auto& c : split(fields[1], ',')) coeffs.emplace_back(c);
      s.add_term(RootVector(std::move(coords)), UPoly(std::move(coeffs)));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(std::string("bad series line: ") + ex.what(), offset);
    }
    offset += line.size() + 1;
  }
  return s;
}

std::string to_json(const TruncatedSeries& s) {
  nlohmann::ordered_json doc;
  doc["rank"] = s.rank().value();
  doc["cap"] = s.cap();
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [exponent, poly] : s.terms()) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Integer& c : poly.coeffs()) {
      if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        coeffs.push_back(static_cast<long long>(c));
      else
        coeffs.push_back(c.str());
    }
    doc["terms"].push_back({{"exponent", exponent.coeffs()}, {"coefficients", std::move(coeffs)}});
  }
  return doc.dump();
}

TruncatedSeries from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(ex.what(), ex.byte);
  }
  try {
    TruncatedSeries s(Rank(doc.at("rank").get<int>()), doc.at("cap").get<int>());
    for (const auto& term : doc.at("terms")) {
      std::vector<Integer> coeffs;
      for (const auto& c : term.at("coefficients"))
        coeffs.push_back(c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long long>()));
      s.add_term(RootVector(term.at("exponent").get<std::vector<int>>()), UPoly(std::move(coeffs)));
    }
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad series document: ") + ex.what(), 0);
  }
}

}  // namespace gk
