#pragma once

// Exact truncated formal series in z_1..z_r with coefficients in Z[u],
// u = t^{-1}, and the two sides of the Gindikin-Karpelevich identity
//
//   prod_{alpha > 0} (1 - u z^alpha) / (1 - z^alpha)
//     = sum_{b in T(infinity)} (1 - u)^{seg(b)} z^{-wt(b)}.
//
// Truncation is by total height of the exponent.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gk/roots.hpp"
#include "gk/tableaux.hpp"

namespace gk {

using Integer = boost::multiprecision::cpp_int;

/// Dense polynomial in u with integer coefficients, lowest degree first and
/// no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs);
  UPoly(std::initializer_list<long long> coeffs);

  static UPoly constant(Integer c);
  /// (1 - u)^k.
  static UPoly one_minus_u_pow(int k);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  UPoly& operator+=(const UPoly& other);
  friend UPoly operator+(UPoly lhs, const UPoly& rhs) { return lhs += rhs; }
  friend UPoly operator*(const UPoly& lhs, const UPoly& rhs);

  Integer evaluate(const Integer& u) const;
  /// Coordinates x_k with p = sum_k x_k (1 - u)^k.
  std::vector<Integer> in_one_minus_u_basis() const;

  bool operator==(const UPoly&) const = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

std::string to_string(const UPoly& p);

class TruncatedSeries {
 public:
  using Terms = std::map<RootVector, UPoly, GradedLess>;

  /// The zero series.
  TruncatedSeries(Rank rank, int cap);
  static TruncatedSeries one(Rank rank, int cap);

  Rank rank() const noexcept { return rank_; }
  int cap() const noexcept { return cap_; }
  const Terms& terms() const noexcept { return terms_; }

  /// Adds `poly` at `exponent`; silently dropped when height exceeds the cap.
  void add_term(const RootVector& exponent, const UPoly& poly);
  /// Zero polynomial if absent.
  UPoly coefficient(const RootVector& exponent) const;

  /// Product truncated to the common cap. Throws CapMismatch on differing
  /// caps or ranks.
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

  /// Specializes u; zero values are dropped.
  std::map<RootVector, Integer, GradedLess> evaluate(const Integer& u) const;

  bool operator==(const TruncatedSeries& other) const;

 private:
  Rank rank_;
  int cap_;
  Terms terms_;
};

/// prod_{alpha > 0} (1 + (1 - u) sum_{m >= 1} z^{m alpha}) truncated at `cap`.
TruncatedSeries product_side(Rank rank, int cap);

enum class Strategy { bfs, direct };

/// Every b in T(infinity) with height(-wt(b)) <= cap, sorted by CanonicalLess.
/// bfs applies f_i level by level from b_infinity; direct lists counts tables
/// with sum n[j][k] (k - j) <= cap.
std::vector<MLTableau> enumerate_crystal(Rank rank, int cap, Strategy strategy = Strategy::bfs);

/// Sum over enumerate_crystal of (1 - u)^{seg(b)} z^{-wt(b)}.
TruncatedSeries sum_side(Rank rank, int cap, Strategy strategy = Strategy::bfs);

struct Mismatch {
  RootVector exponent;
  UPoly lhs;
  UPoly rhs;
};

struct CompareReport {
  std::vector<Mismatch> mismatches;
  bool match() const noexcept { return mismatches.empty(); }
};

/// Coefficientwise comparison. Throws CapMismatch on differing caps or ranks.
CompareReport compare(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// Number of multisets of positive roots summing to `weight`.
Integer kostant(Rank rank, const RootVector& weight);

/// TSV: a "# rank=R cap=D" header, then one line per exponent:
/// comma-separated coordinates, a tab, comma-separated coefficients by
/// u-degree.
std::string to_tsv(const TruncatedSeries& s);
TruncatedSeries from_tsv(std::string_view text);

/// {"rank":R,"cap":D,"terms":[{"exponent":[...],"coefficients":[...]}]}.
/// Coefficients are JSON integers when they fit in 64 bits, decimal strings
/// otherwise.
std::string to_json(const TruncatedSeries& s);
TruncatedSeries from_json(std::string_view text);

}  // namespace gk
