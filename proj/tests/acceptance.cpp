// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gk/cli.hpp"
#include "gk/mvquiver.hpp"
#include "gk/series.hpp"
#include "gk/strings.hpp"
#include "gk/tableaux.hpp"

using namespace gk;

namespace {

// Pinned thresholds. Every comparison below is exact; only runtime has a bound.
constexpr double kIdentityBudgetSeconds = 60.0;
constexpr int kExhaustiveMaxRank = 3;
constexpr int kExhaustiveCap = 6;
constexpr int kRandomRank = 4;
constexpr int kRandomSamples = 10000;
constexpr int kRandomMaxCount = 3;
constexpr int kPrefixRank = 3;
constexpr int kPrefixCap = 5;
constexpr std::uint32_t kSeed = 314159;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail = what;
    pass = pass && cond;
  }
};

MLTableau reduced(const std::string& text) { return parse_tableau(text, TableauMode::reduced); }

std::vector<MLTableau> criterion_domain() {
  std::vector<MLTableau> out;
  for (int r = 1; r <= kExhaustiveMaxRank; ++r) {
    auto part = enumerate_crystal(Rank(r), kExhaustiveCap, Strategy::direct);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<MLTableau> random_rank4() {
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> dist(0, kRandomMaxCount);
  std::vector<MLTableau> out;
  for (int n = 0; n < kRandomSamples; ++n) {
    MLTableau b{Rank(kRandomRank)};
    for (int j = 1; j <= kRandomRank; ++j)
      for (int k = j + 1; k <= kRandomRank + 1; ++k) b.set_count(j, k, dist(rng));
    out.push_back(b);
  }
  return out;
}

Outcome gk_identity() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream terms;
  for (auto [r, cap] : {std::pair{1, 8}, {2, 6}, {3, 5}}) {
    const TruncatedSeries lhs = product_side(Rank(r), cap);
    const TruncatedSeries rhs = sum_side(Rank(r), cap);
    const CompareReport report = compare(lhs, rhs);
    o.require(report.match(), "mismatch at r=" + std::to_string(r) + " D=" + std::to_string(cap));
    terms << " (" << r << "," << cap << "):" << lhs.terms().size();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < kIdentityBudgetSeconds, "over the time budget");
  if (o.pass) o.detail = "terms" + terms.str() + ", " + std::to_string(secs) + " s";
  return o;
}

Outcome seg_nc_nz(const std::vector<MLTableau>& dom, const std::vector<MLTableau>& sample) {
  Outcome o;
  std::size_t n = 0;
  for (const auto* set : {&dom, &sample})
    for (const MLTableau& b : *set) {
      const StringParam psi = bzl_path(b);
      const int s = seg(b);
      o.require(s == nc(psi) && s == nz(to_lusztig(psi)), "fails at " + format_tableau(b));
      ++n;
    }
  if (o.pass) o.detail = std::to_string(n) + " elements";
  return o;
}

Outcome segment_triangle_matches(const std::vector<MLTableau>& dom, const std::vector<MLTableau>& sample) {
  Outcome o;
  std::size_t n = 0;
  for (const auto* set : {&dom, &sample})
    for (const MLTableau& b : *set) {
      o.require(segment_triangle(b) == bzl_path(b), "fails at " + format_tableau(b));
      ++n;
    }
  if (o.pass) o.detail = std::to_string(n) + " elements";
  return o;
}

Outcome worked_examples() {
  Outcome o;
  const StringParam p = bzl_path(reduced("2,3/3"));
  o.require(p.values() == std::vector<int>{1, 2, 1} && p.num_circled() == 0 && seg(reduced("2,3/3")) == 3,
            "psi(2,3/3)");
  const StringParam q = bzl_path(reduced("3/*"));
  o.require(q.values() == std::vector<int>{0, 1, 1} && q.circled(1, 1) && q.circled(2, 1) && !q.circled(2, 2) &&
                nc(q) == 1,
            "psi(3/*)");

  const StringParam tri = parse_string_param("(0;1,1;3,2,0;4,2,2,1)");
  std::set<std::pair<int, int>> circles;
  for (int j = 1; j <= 4; ++j)
    for (int l = 1; l <= j; ++l)
      if (tri.circled(j, l)) circles.emplace(j, l);
  o.require(circles == std::set<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 3}, {4, 2}}, "rank-4 triangle circles");

  const FullTableau young{{{1, 3, 3}, {3, 4}, {5}}};
  const Signature sig = signature(reading_word(young), 3);
  o.require(sig.raw == std::vector<int>{1, 1, -1, 0, 1, 0}, "raw 3-signature");
  o.require(sig.reduced == std::vector<int>{1, 0, 0, 0, 1, 0}, "reduced 3-signature");
  o.require(f_tilde_fixed_shape(young, 3) == FullTableau{{{1, 3, 4}, {3, 4}, {5}}}, "f_3 on young(133,34,5)");
  return o;
}

// Figure 1 adjacency (source, target, color) and Figure 2 exponents.
const std::vector<std::tuple<std::string, std::string, int>> kFigureEdges = {
    {"*/*", "2/*", 1},           {"*/*", "*/3", 2},           {"2/*", "2,2/*", 1},
    {"2/*", "3/*", 2},           {"*/3", "2/3", 1},           {"*/3", "*/3,3", 2},
    {"2,2/*", "2,2,2/*", 1},     {"2,2/*", "2,3/*", 2},       {"3/*", "2,3/*", 1},
    {"3/*", "3/3", 2},           {"2/3", "2,2/3", 1},         {"2/3", "2/3,3", 2},
    {"*/3,3", "2/3,3", 1},       {"*/3,3", "*/3,3,3", 2},     {"2,2,2/*", "2,2,2,2/*", 1},
    {"2,2,2/*", "2,2,3/*", 2},   {"2,3/*", "2,2,3/*", 1},     {"2,3/*", "3,3/*", 2},
    {"2,2/3", "2,2,2/3", 1},     {"2,2/3", "2,3/3", 2},       {"3/3", "2,3/3", 1},
    {"3/3", "3/3,3", 2},         {"2/3,3", "2,2/3,3", 1},     {"2/3,3", "2/3,3,3", 2},
    {"*/3,3,3", "2/3,3,3", 1},   {"*/3,3,3", "*/3,3,3,3", 2},
};

const std::map<std::string, int> kFigureExponents = {
    {"*/*", 0},       {"2/*", 1},       {"*/3", 1},       {"2,2/*", 1},     {"3/*", 1},   {"*/3,3", 1},
    {"2,2,2/*", 1},   {"*/3,3,3", 1},   {"2,2,2,2/*", 1}, {"3,3/*", 1},     {"*/3,3,3,3", 1},
    {"2/3", 2},       {"2,3/*", 2},     {"2,2/3", 2},     {"3/3", 2},       {"2/3,3", 2}, {"2,2,3/*", 2},
    {"2,2,2/3", 2},   {"2,2/3,3", 2},   {"3/3,3", 2},     {"2/3,3,3", 2},   {"2,3/3", 3},
};

Outcome figures() {
  Outcome o;
  cli::RunConfig cfg;
  cfg.command = cli::Command::graph;
  cfg.rank = 2;
  cfg.depth = 4;
  cfg.coefficients = true;
  const cli::CommandResult res = cli::run(cfg);
  o.require(res.exit_code == 0, "graph command failed");

  const std::regex node_re(R"re(^\s*(b\d+) \[label="([^"\\]*)[^"]*", seg="(\d+)", depth="(\d+)"\];)re");
  const std::regex edge_re(R"re(^\s*(b\d+) -> (b\d+) \[label="(\d+)"\];)re");
  std::map<std::string, std::string> label;
  std::map<std::string, int> exponent;
  std::vector<int> per_depth(5, 0);
  std::set<std::tuple<std::string, std::string, int>> edges;
  std::istringstream in(res.out);
  std::vector<std::tuple<std::string, std::string, int>> raw_edges;
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    if (std::regex_search(line, m, node_re)) {
      label[m[1]] = m[2];
      exponent[m[2]] = std::stoi(m[3]);
      const int d = std::stoi(m[4]);
      if (d >= 0 && d < 5) ++per_depth[d];
      else o.require(false, "depth out of range");
    } else if (std::regex_search(line, m, edge_re)) {
      raw_edges.emplace_back(m[1], m[2], std::stoi(m[3]));
    }
  }
  for (const auto& [s, t, c] : raw_edges) edges.emplace(label[s], label[t], c);
  o.require(label.size() == 22, "node count " + std::to_string(label.size()));
  o.require(per_depth == std::vector<int>{1, 2, 4, 6, 9}, "per-depth counts");
  o.require(raw_edges.size() == kFigureEdges.size() &&
                edges == std::set<std::tuple<std::string, std::string, int>>(kFigureEdges.begin(), kFigureEdges.end()),
            "adjacency differs from the transcription");
  o.require(exponent == kFigureExponents, "coefficient exponents differ");
  if (o.pass) o.detail = "22 nodes, " + std::to_string(edges.size()) + " edges";
  return o;
}

Outcome kostant_and_collapse() {
  Outcome o;
  std::size_t checked = 0;
  for (int r = 1; r <= kExhaustiveMaxRank; ++r) {
    const TruncatedSeries s = sum_side(Rank(r), kExhaustiveCap);
    const auto at_zero = s.evaluate(0);
    // Every exponent of height <= cap, including those absent from the sum.
    std::vector<int> v(r, 0);
    while (true) {
      int h = 0;
      for (int x : v) h += x;
      if (h <= kExhaustiveCap) {
        const RootVector w(v);
        const auto it = at_zero.find(w);
        o.require((it == at_zero.end() ? Integer(0) : it->second) == kostant(Rank(r), w), "u=0 coefficient");
        ++checked;
      }
      int i = 0;
      while (i < r && ++v[i] > kExhaustiveCap) v[i++] = 0;
      if (i == r) break;
    }
    const auto at_one = s.evaluate(1);
    o.require(at_one.size() == 1 && at_one.begin()->first == RootVector(Rank(r)) && at_one.begin()->second == 1,
              "u=1 does not collapse to 1");
  }
  if (o.pass) o.detail = std::to_string(checked) + " exponents";
  return o;
}

Outcome crystal_axioms(const std::vector<MLTableau>& dom) {
  Outcome o;
  for (const MLTableau& b : dom)
    for (int i = 1; i <= b.r(); ++i) {
      const MLTableau fb = f(b, i);
      o.require(e(fb, i) == b, "e f != id at " + format_tableau(b));
      RootVector w = weight_neg(b);
      w.add({i, i});
      o.require(weight_neg(fb) == w, "weight at " + format_tableau(b));
      o.require(in_t_infinity(materialize(fb), b.rank()), "f leaves T(inf) at " + format_tableau(b));
      if (auto eb = e(b, i)) {
        o.require(f(*eb, i) == b, "f e != id at " + format_tableau(b));
        o.require(in_t_infinity(materialize(*eb), b.rank()), "e leaves T(inf) at " + format_tableau(b));
      }
    }
  if (o.pass) o.detail = std::to_string(dom.size()) + " elements";
  return o;
}

Outcome strategies_agree() {
  Outcome o;
  for (int r = 1; r <= kExhaustiveMaxRank; ++r)
    o.require(enumerate_crystal(Rank(r), kExhaustiveCap, Strategy::bfs) ==
                  enumerate_crystal(Rank(r), kExhaustiveCap, Strategy::direct),
              "r=" + std::to_string(r));
  return o;
}

Outcome dictionary(const std::vector<MLTableau>& dom) {
  Outcome o;
  for (const MLTableau& b : dom) {
    const LongWord w = default_long_word(b.rank());
    const LusztigDatum c = to_lusztig(bzl_path(b));
    const QuiverDecomposition d = lusztig_to_quiver(c, w);
    const MVPathDatum path = lusztig_to_path(c, w);
    o.require(gamma(d) == nz(c) && nz(c) == seg(b), "gamma/nz/seg at " + format_tableau(b));
    o.require(dim_vector(d) == weight_neg(b) && path.vertices.back() == weight_neg(b).as_signed(),
              "dim/weight/vertex at " + format_tableau(b));
  }
  if (o.pass) o.detail = std::to_string(dom.size()) + " elements";
  return o;
}

Outcome prefixes_clear_segments() {
  Outcome o;
  const Rank rank(kPrefixRank);
  const LongWord word = default_long_word(rank);
  const auto dom = enumerate_crystal(rank, kPrefixCap, Strategy::direct);
  for (const MLTableau& b : dom) {
    const StringParam psi = bzl_path(b);
    for (int k = 2; k <= kPrefixRank + 1; ++k) {
      const std::size_t len = static_cast<std::size_t>((k - 1) * k / 2);
      const auto cleared = apply_e_sequence(b, std::span<const int>(word.letters().data(), len),
                                            std::span<const int>(psi.values().data(), len));
      bool ok = cleared.has_value();
      for (int j = 2; ok && j <= k; ++j) ok = seg_k(*cleared, j) == 0;
      o.require(ok, "k=" + std::to_string(k) + " at " + format_tableau(b));
    }
  }
  if (o.pass) o.detail = std::to_string(dom.size()) + " elements";
  return o;
}

}  // namespace

int main() {
  const auto dom = criterion_domain();
  const auto sample = random_rank4();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"gk-identity", gk_identity},
      {"seg-nc-nz", [&] { return seg_nc_nz(dom, sample); }},
      {"segment-triangle", [&] { return segment_triangle_matches(dom, sample); }},
      {"worked-examples", worked_examples},
      {"figures", figures},
      {"kostant", kostant_and_collapse},
      {"crystal-axioms", [&] { return crystal_axioms(dom); }},
      {"enumeration", strategies_agree},
      {"dictionary", [&] { return dictionary(dom); }},
      {"prefix-segments", prefixes_clear_segments},
  };

  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    failures += !o.pass;
    std::printf("%s %zu %s%s%s\n", o.pass ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
