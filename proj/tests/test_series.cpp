#include <random>

#include "doctest.h"
#include "gk/error.hpp"
#include "gk/series.hpp"
#include "support.hpp"

using namespace gk;

namespace {

// Brute-force expansion of the product side: walk the positive roots, choosing
// a multiplicity for each, and add (1-u)^{#roots used} at the total weight.
void expand(const std::vector<Interval>& roots, std::size_t idx, int budget, const RootVector& at, int used,
            TruncatedSeries& out) {
  if (idx == roots.size()) {
    out.add_term(at, UPoly::one_minus_u_pow(used));
    return;
  }
  const Interval root = roots[idx];
  expand(roots, idx + 1, budget, at, used, out);
  RootVector cur = at;
  for (int m = 1; m * root.height() <= budget; ++m) {
    cur.add(root);
    expand(roots, idx + 1, budget - m * root.height(), cur, used + 1, out);
  }
}

TruncatedSeries oracle_product(int r, int cap) {
  TruncatedSeries out(Rank(r), cap);
  const RootVector zero{Rank(r)};
  expand(positive_roots(Rank(r)), 0, cap, zero, 0, out);
  return out;
}

// Multisets of positive roots summing to `target`, by plain recursion.
long long oracle_kostant(const std::vector<Interval>& roots, std::size_t idx, const RootVector& target) {
  if (idx == roots.size()) return height(target) == 0 ? 1 : 0;
  long long total = oracle_kostant(roots, idx + 1, target);
  RootVector rest = target;
  const RootVector step = RootVector::of(Rank(static_cast<int>(target.size())), roots[idx]);
  while (rest.dominates(step)) {
    rest = rest.minus(step);
    total += oracle_kostant(roots, idx + 1, rest);
  }
  return total;
}

std::vector<RootVector> exponents_up_to(int r, int cap) {
  std::vector<RootVector> out;
  std::vector<int> v(r, 0);
  while (true) {
    int h = 0;
    for (int x : v) h += x;
    if (h <= cap) out.emplace_back(v);
    int i = 0;
    while (i < r && ++v[i] > cap) v[i++] = 0;
    if (i == r) break;
  }
  return out;
}

}  // namespace

TEST_CASE("UPoly") {
  const UPoly p{1, -1};
  CHECK(UPoly::one_minus_u_pow(1) == p);
  CHECK(UPoly::one_minus_u_pow(0) == UPoly{1});
  CHECK(UPoly::one_minus_u_pow(3) == UPoly{1, -3, 3, -1});
  CHECK(p * p == UPoly{1, -2, 1});
  CHECK((p + UPoly{0, 1}) == UPoly{1});
  CHECK((p + UPoly{-1, 1}).is_zero());
  CHECK(UPoly{0, 0, 0}.is_zero());
  CHECK(UPoly{}.degree() == -1);
  CHECK(UPoly{3, 0, 2, 0}.degree() == 2);
  CHECK(to_string(UPoly{1, -1}) == "1,-1");
  CHECK(to_string(UPoly{}) == "0");
  CHECK(UPoly{1, -3, 3, -1}.evaluate(2) == -1);
  CHECK(UPoly::one_minus_u_pow(5).evaluate(1) == 0);
  const UPoly q = UPoly::one_minus_u_pow(1) + UPoly::one_minus_u_pow(2) + UPoly::one_minus_u_pow(2);
  CHECK(q.in_one_minus_u_basis() == std::vector<Integer>{0, 1, 2});
}

TEST_CASE("TruncatedSeries basics") {
  TruncatedSeries s(Rank(2), 2);
  s.add_term({1, 0}, UPoly{1});
  s.add_term({2, 1}, UPoly{1});  // above cap
  s.add_term({0, 1}, UPoly{});
  CHECK(s.terms().size() == 1);
  CHECK(s.coefficient({1, 0}) == UPoly{1});
  CHECK(s.coefficient({0, 2}).is_zero());
  s.add_term({1, 0}, UPoly{-1});
  CHECK(s.terms().empty());

  TruncatedSeries x = TruncatedSeries::one(Rank(1), 3);
  x.add_term({1}, UPoly{1});
  TruncatedSeries sq = x * x;
  CHECK(sq.coefficient({2}) == UPoly{1});
  CHECK(sq.coefficient({1}) == UPoly{2});
  CHECK(sq.coefficient({3}).is_zero());
  CHECK_THROWS_AS(x * TruncatedSeries::one(Rank(1), 2), CapMismatch);
  CHECK_THROWS_AS(x * TruncatedSeries::one(Rank(2), 3), CapMismatch);
}

TEST_CASE("product_side") {
  const TruncatedSeries p = product_side(Rank(1), 3);
  CHECK(p.terms().size() == 4);
  CHECK(p.coefficient({0}) == UPoly{1});
  for (int m = 1; m <= 3; ++m) CHECK(p.coefficient({m}) == UPoly{1, -1});
  for (int r = 1; r <= 4; ++r) CHECK(product_side(Rank(r), 0) == TruncatedSeries::one(Rank(r), 0));
  for (auto [r, cap] : {std::pair{1, 8}, {2, 6}, {3, 5}, {4, 4}}) CHECK(product_side(Rank(r), cap) == oracle_product(r, cap));
}

TEST_CASE("enumerate_crystal") {
  const auto top = enumerate_crystal(Rank(2), 1);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == highest(Rank(2)));
  CHECK(std::find(top.begin(), top.end(), parse_tableau("2/*")) != top.end());
  CHECK(std::find(top.begin(), top.end(), parse_tableau("*/3")) != top.end());

  const auto fig = enumerate_crystal(Rank(2), 4);
  CHECK(fig.size() == 22);
  std::vector<int> per_depth(5, 0);
  for (const MLTableau& b : fig) ++per_depth[height(weight_neg(b))];
  CHECK(per_depth == std::vector<int>{1, 2, 4, 6, 9});

  CHECK(enumerate_crystal(Rank(1), 5).size() == 6);
  CHECK(enumerate_crystal(Rank(3), 0).size() == 1);

  for (int r = 1; r <= 3; ++r) {
    const auto bfs = enumerate_crystal(Rank(r), 6, Strategy::bfs);
    CHECK(bfs == enumerate_crystal(Rank(r), 6, Strategy::direct));
    CHECK(std::is_sorted(bfs.begin(), bfs.end(), CanonicalLess{}));
    CHECK(std::adjacent_find(bfs.begin(), bfs.end()) == bfs.end());
    // The count at each weight is the Kostant partition function.
    std::map<RootVector, long long, GradedLess> counts;
    for (const MLTableau& b : bfs) ++counts[weight_neg(b)];
    for (const auto& [w, n] : counts) CHECK(Integer(n) == kostant(Rank(r), w));
  }
}

TEST_CASE("sum_side coefficients") {
  const TruncatedSeries s = sum_side(Rank(2), 4);
  CHECK(s.coefficient({0, 0}) == UPoly{1});
  CHECK(s.coefficient({1, 1}) == UPoly::one_minus_u_pow(1) + UPoly::one_minus_u_pow(2));
  const auto basis = s.coefficient({2, 2}).in_one_minus_u_basis();
  REQUIRE(basis.size() == 4);
  CHECK(basis[3] == 1);
}

TEST_CASE("compare") {
  CHECK(compare(product_side(Rank(2), 6), sum_side(Rank(2), 6)).match());
  CHECK(compare(product_side(Rank(1), 6), sum_side(Rank(1), 6)).match());

  TruncatedSeries bad = sum_side(Rank(2), 3);
  bad.add_term({1, 1}, UPoly{0, 1});
  const CompareReport report = compare(product_side(Rank(2), 3), bad);
  REQUIRE(report.mismatches.size() == 1);
  CHECK(report.mismatches[0].exponent == RootVector{1, 1});
  CHECK(report.mismatches[0].rhs == report.mismatches[0].lhs + UPoly{0, 1});

  CHECK_THROWS_AS(compare(product_side(Rank(2), 3), sum_side(Rank(2), 4)), CapMismatch);
  CHECK_THROWS_AS(compare(product_side(Rank(2), 3), sum_side(Rank(3), 3)), CapMismatch);
}

TEST_CASE("kostant") {
  CHECK(kostant(Rank(2), {1, 1}) == 2);
  CHECK(kostant(Rank(2), {0, 0}) == 1);
  CHECK(kostant(Rank(2), {2, 2}) == 3);
  CHECK(kostant(Rank(3), {1, 1, 1}) == 4);
  CHECK(kostant(Rank(1), {7}) == 1);
  for (int r = 1; r <= 4; ++r) {
    const auto roots = positive_roots(Rank(r));
    for (const RootVector& w : exponents_up_to(r, 5)) CHECK(kostant(Rank(r), w) == Integer(oracle_kostant(roots, 0, w)));
  }
}

TEST_CASE("the identity and its specializations") {
  for (auto [r, cap] : {std::pair{1, 8}, {2, 6}, {3, 5}, {4, 4}}) {
    const TruncatedSeries lhs = product_side(Rank(r), cap);
    const TruncatedSeries rhs = sum_side(Rank(r), cap);
    CHECK(compare(lhs, rhs).match());
    CHECK(rhs == sum_side(Rank(r), cap, Strategy::direct));

    const auto at_zero = rhs.evaluate(0);
    for (const RootVector& w : exponents_up_to(r, cap)) {
      auto it = at_zero.find(w);
      CHECK((it == at_zero.end() ? Integer(0) : it->second) == kostant(Rank(r), w));
    }
    const auto at_one = rhs.evaluate(1);
    REQUIRE(at_one.size() == 1);
    CHECK(at_one.begin()->first == RootVector(Rank(r)));
    CHECK(at_one.begin()->second == 1);

    // Nonnegative expansion in the (1-u)^k basis.
    for (const auto& [w, poly] : rhs.terms())
      for (const Integer& x : poly.in_one_minus_u_basis()) CHECK(x >= 0);
  }
}

TEST_CASE("TSV and JSON") {
  const TruncatedSeries s = sum_side(Rank(2), 3);
  const std::string tsv = to_tsv(s);
  CHECK(tsv.rfind("# rank=2 cap=3\n", 0) == 0);
  CHECK(tsv.find("0,0\t1\n") != std::string::npos);
  CHECK(from_tsv(tsv) == s);
  CHECK(from_json(to_json(s)) == s);
  CHECK(to_json(TruncatedSeries::one(Rank(1), 0)) ==
        R"({"rank":1,"cap":0,"terms":[{"exponent":[0],"coefficients":[1]}]})");

  TruncatedSeries big(Rank(1), 2);
  big.add_term({1}, UPoly(std::vector<Integer>{Integer("123456789012345678901234567890"), -1}));
  CHECK(from_tsv(to_tsv(big)) == big);
  CHECK(to_json(big).find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(from_json(to_json(big)) == big);

  CHECK_THROWS_AS(from_tsv("0,0\t1\n"), ParseError);
  CHECK_THROWS_AS(from_tsv("# rank=2 cap=3\n0\t1\n"), ParseError);
  CHECK_THROWS_AS(from_tsv("# rank=2 cap=3\n0,0\tx\n"), ParseError);
  CHECK_THROWS_AS(from_json("{"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"rank":1,"cap":1})"), ParseError);
}
