#pragma once

// Type A_r root-system bookkeeping. Roots, weights (negated) and dimension
// vectors all live in simple-root coordinates; coroots are identified with
// roots since type A is simply laced.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gk {

/// Number of simple roots of sl_{r+1}. Letters of the tableau alphabet run
/// over 1..r+1.
class Rank {
 public:
  explicit Rank(int r);

  int value() const noexcept { return r_; }
  int letters() const noexcept { return r_ + 1; }
  /// N = r(r+1)/2, the number of positive roots.
  int num_positive_roots() const noexcept { return r_ * (r_ + 1) / 2; }

  auto operator<=>(const Rank&) const = default;

 private:
  int r_;
};

/// The positive root alpha_a + ... + alpha_b, 1 <= a <= b <= r.
struct Interval {
  int a = 1;
  int b = 1;

  int height() const noexcept { return b - a + 1; }
  bool contains(int i) const noexcept { return a <= i && i <= b; }

  auto operator<=>(const Interval&) const = default;
};

/// Integer vector in simple-root coordinates; entries may be negative.
class SignedRootVector {
 public:
  SignedRootVector() = default;
  explicit SignedRootVector(Rank rank) : coeffs_(rank.value(), 0) {}
  explicit SignedRootVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const noexcept { return coeffs_.size(); }
  /// 1-based simple index.
  int operator()(int i) const { return coeffs_.at(i - 1); }
  int& operator()(int i) { return coeffs_.at(i - 1); }
  const std::vector<int>& coeffs() const noexcept { return coeffs_; }

  SignedRootVector& operator+=(const SignedRootVector& other);
  SignedRootVector& operator-=(const SignedRootVector& other);
  friend SignedRootVector operator+(SignedRootVector lhs, const SignedRootVector& rhs) {
    return lhs += rhs;
  }
  friend SignedRootVector operator*(int scale, SignedRootVector v);

  auto operator<=>(const SignedRootVector&) const = default;

 private:
  std::vector<int> coeffs_;
};

/// Nonnegative integer vector in simple-root coordinates (an element of Q^+).
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(Rank rank) : coeffs_(rank.value(), 0) {}
  /// Throws std::invalid_argument on a negative entry.
  explicit RootVector(std::vector<int> coeffs);
  RootVector(std::initializer_list<int> coeffs) : RootVector(std::vector<int>(coeffs)) {}

  static RootVector of(Rank rank, Interval root);

  std::size_t size() const noexcept { return coeffs_.size(); }
  int operator()(int i) const { return coeffs_.at(i - 1); }
  const std::vector<int>& coeffs() const noexcept { return coeffs_; }

  /// Adds `scale` copies of `root`.
  RootVector& add(Interval root, int scale = 1);
  RootVector& operator+=(const RootVector& other);
  friend RootVector operator+(RootVector lhs, const RootVector& rhs) { return lhs += rhs; }

  /// True iff every coordinate of `other` is <= the matching coordinate here.
  bool dominates(const RootVector& other) const;
  /// this - other; requires dominates(other).
  RootVector minus(const RootVector& other) const;

  SignedRootVector as_signed() const { return SignedRootVector(coeffs_); }

  auto operator<=>(const RootVector&) const = default;

 private:
  std::vector<int> coeffs_;
};

int height(const RootVector& v);

/// Graded order: by height, then coordinates lexicographically.
struct GradedLess {
  bool operator()(const RootVector& lhs, const RootVector& rhs) const;
};

/// A reduced word for the longest Weyl group element, with its root sequence
/// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}) computed at construction.
class LongWord {
 public:
  /// Throws InvalidWord if the letters are out of range, the length is not N,
  /// or the root sequence is not N distinct positive roots.
  LongWord(Rank rank, std::vector<int> letters);

  Rank rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  int operator[](std::size_t k) const { return letters_.at(k); }
  std::span<const int> letters() const noexcept { return letters_; }
  std::span<const Interval> roots() const noexcept { return roots_; }

  bool operator==(const LongWord& other) const { return letters_ == other.letters_; }

 private:
  Rank rank_;
  std::vector<int> letters_;
  std::vector<Interval> roots_;
};

/// All positive roots sorted by (a, b).
std::vector<Interval> positive_roots(Rank rank);

/// (1; 2,1; 3,2,1; ...; r,...,1).
LongWord default_long_word(Rank rank);

/// Roots attached to an arbitrary letter sequence. Throws InvalidWord when
/// some beta_k fails to be a positive root or repeats an earlier one.
std::vector<Interval> word_roots(Rank rank, std::span<const int> letters);
std::vector<Interval> word_roots(const LongWord& word);

/// Simple reflection s_i acting on simple-root coordinates.
SignedRootVector reflect(const SignedRootVector& v, int i);

std::string to_string(Interval root);

}  // namespace gk
