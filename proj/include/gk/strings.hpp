#pragma once

// String (BZL) and Lusztig parametrizations for the long word
// (1; 2,1; 3,2,1; ...; r,...,1).
//
// Both are triangles with rows 1..r, row j holding j entries. For the
// string parametrization, entry (j, l) is the exponent of e_{j-l+1} in the
// j-th block of the path, so the inline form (a11; a21,a22; ...) lists the
// path in order.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gk/roots.hpp"
#include "gk/tableaux.hpp"

namespace gk {

namespace detail {

/// Flat row-major storage for a triangle with rows 1..r.
class Triangle {
 public:
  explicit Triangle(Rank rank) : rank_(rank), values_(rank.num_positive_roots(), 0) {}
  Triangle(Rank rank, std::vector<int> values);

  Rank rank() const noexcept { return rank_; }
  int r() const noexcept { return rank_.value(); }
  /// 1 <= l <= j <= r.
  int operator()(int j, int l) const { return values_.at(index(j, l)); }
  int& operator()(int j, int l) { return values_.at(index(j, l)); }
  const std::vector<int>& values() const noexcept { return values_; }

  auto operator<=>(const Triangle&) const = default;

 private:
  std::size_t index(int j, int l) const;

  Rank rank_;
  std::vector<int> values_;
};

}  // namespace detail

class StringParam : public detail::Triangle {
 public:
  using Triangle::Triangle;

  /// a(j,l) is circled iff a(j,l) == a(j,l+1), with a(j,j+1) = 0.
  bool circled(int j, int l) const;
  int num_circled() const;
};

class LusztigDatum : public detail::Triangle {
 public:
  explicit LusztigDatum(Rank rank) : Triangle(rank) {}
  /// Throws std::invalid_argument on a negative entry.
  LusztigDatum(Rank rank, std::vector<int> values);
};

/// The BZL path: a_k is the largest power of e_{w_k} applicable after the
/// first k-1 steps have been exhausted. Any valid long word is accepted; the
/// triangle shape and circling only carry meaning for default_long_word.
StringParam bzl_path(const MLTableau& b, const LongWord& word);
StringParam bzl_path(const MLTableau& b);

/// Applies e_{letters[k]}^{powers[k]} for k = 0, 1, ... in order. Returns
/// nullopt as soon as some power is not applicable.
std::optional<MLTableau> apply_e_sequence(const MLTableau& b, std::span<const int> letters,
                                          std::span<const int> powers);

/// Number of uncircled entries.
int nc(const StringParam& sp);
/// Number of nonzero entries.
int nz(const LusztigDatum& c);
int num_zeros(const LusztigDatum& c);

/// Rows weakly decreasing and nonnegative.
bool in_string_cone(const StringParam& sp);

/// Row j maps to (a(j,j), a(j,j-1) - a(j,j), ..., a(j,1) - a(j,2)).
/// Throws ConeViolation outside the string cone.
LusztigDatum to_lusztig(const StringParam& sp);
/// Row-wise partial sums; inverse of to_lusztig.
StringParam from_lusztig(const LusztigDatum& c);

/// a(i,j) = sum of lengths of (i+1)-segments in rows 1..i-j+1.
StringParam segment_triangle(const MLTableau& b);

/// Row i of the datum is (n[1][i+1], ..., n[i][i+1]).
LusztigDatum tableau_to_lusztig(const MLTableau& b);
MLTableau lusztig_to_tableau(const LusztigDatum& c);

/// Inline "(a;b,c;d,e,f)". With `decorate`, circled entries print as "(a)".
std::string format_string_param(const StringParam& sp, bool decorate = true);
std::string format_lusztig(const LusztigDatum& c);

/// Parses the inline form; the number of rows fixes the rank. Circle
/// decorations are optional but must agree with the circling rule if given.
StringParam parse_string_param(std::string_view text);
LusztigDatum parse_lusztig(std::string_view text);

}  // namespace gk
