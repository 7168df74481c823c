#pragma once

// Lusztig data read as MV polytope edge lengths along the word's vertex path
// and as interval decompositions of representations of 1 <- 2 <- ... <- r.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gk/roots.hpp"
#include "gk/series.hpp"
#include "gk/strings.hpp"

namespace gk {

struct PathStep {
  Interval root;
  int length;
};

/// Vertices mu_0 = 0, mu_k = mu_{k-1} + c_k beta_k.
struct MVPathDatum {
  std::vector<SignedRootVector> vertices;
  std::vector<PathStep> steps;

  /// Steps of positive length.
  int num_edges() const;
};

MVPathDatum lusztig_to_path(const LusztigDatum& c, const LongWord& word);

/// Interval indecomposable V(a, b) -> multiplicity; zero multiplicities are
/// never stored.
class QuiverDecomposition {
 public:
  explicit QuiverDecomposition(Rank rank) : rank_(rank) {}

  Rank rank() const noexcept { return rank_; }
  const std::map<Interval, int>& summands() const noexcept { return summands_; }
  int multiplicity(Interval v) const;
  void add(Interval v, int multiplicity);

  bool operator==(const QuiverDecomposition&) const = default;

 private:
  Rank rank_;
  std::map<Interval, int> summands_;
};

QuiverDecomposition lusztig_to_quiver(const LusztigDatum& c, const LongWord& word);
/// Inverse of lusztig_to_quiver for a long word.
LusztigDatum quiver_to_lusztig(const QuiverDecomposition& d, const LongWord& word);

/// Number of distinct indecomposable summands.
int gamma(const QuiverDecomposition& d);
RootVector dim_vector(const QuiverDecomposition& d);

/// Space-separated "[a,b]×m" tokens sorted by (a, b); "x" is accepted in
/// place of "×" when parsing.
std::string format_decomposition(const QuiverDecomposition& d);
QuiverDecomposition parse_decomposition(Rank rank, std::string_view text);

std::string format_vertex(const SignedRootVector& v);

/// sum over decompositions X with height(dim X) <= cap of
/// (1 - u)^{gamma(X)} z^{dim X}, enumerated directly over multiplicities.
TruncatedSeries quiver_side(Rank rank, int cap);

/// sum over Lusztig data c with height(mu_N) <= cap of
/// (1 - u)^{#edges} z^{mu_N}, for the given word.
TruncatedSeries mv_side(const LongWord& word, int cap);

}  // namespace gk
