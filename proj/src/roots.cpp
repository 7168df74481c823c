#include "gk/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gk/error.hpp"

namespace gk {

Rank::Rank(int r) : r_(r) {
  if (r < 1) throw std::invalid_argument("rank must be at least 1, got " + std::to_string(r));
}

SignedRootVector& SignedRootVector::operator+=(const SignedRootVector& other) {
  if (other.size() != size()) throw std::invalid_argument("root vector length mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SignedRootVector& SignedRootVector::operator-=(const SignedRootVector& other) {
  if (other.size() != size()) throw std::invalid_argument("root vector length mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SignedRootVector operator*(int scale, SignedRootVector v) {
  for (auto& c : v.coeffs_) c *= scale;
  return v;
}

RootVector::RootVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  if (std::any_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c < 0; }))
    throw std::invalid_argument("RootVector entries must be nonnegative");
}

RootVector RootVector::of(Rank rank, Interval root) {
  RootVector v(rank);
  v.add(root);
  return v;
}

RootVector& RootVector::add(Interval root, int scale) {
  if (root.a < 1 || root.b > static_cast<int>(size()) || root.a > root.b)
    throw std::out_of_range("interval outside the root system");
  if (scale < 0) throw std::invalid_argument("negative scale");
  for (int i = root.a; i <= root.b; ++i) coeffs_[i - 1] += scale;
  return *this;
}

RootVector& RootVector::operator+=(const RootVector& other) {
  if (other.size() != size()) throw std::invalid_argument("root vector length mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

bool RootVector::dominates(const RootVector& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (other.coeffs_[i] > coeffs_[i]) return false;
  return true;
}

RootVector RootVector::minus(const RootVector& other) const {
  if (!dominates(other)) throw std::invalid_argument("RootVector subtraction leaves Q^+");
  RootVector out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
  return out;
}

int height(const RootVector& v) {
  return std::accumulate(v.coeffs().begin(), v.coeffs().end(), 0);
}

bool GradedLess::operator()(const RootVector& lhs, const RootVector& rhs) const {
  const int hl = height(lhs);
  const int hr = height(rhs);
  if (hl != hr) return hl < hr;
  return lhs.coeffs() < rhs.coeffs();
}

std::vector<Interval> positive_roots(Rank rank) {
  std::vector<Interval> roots;
  roots.reserve(rank.num_positive_roots());
  for (int a = 1; a <= rank.value(); ++a)
    for (int b = a; b <= rank.value(); ++b) roots.push_back({a, b});
  return roots;
}

LongWord default_long_word(Rank rank) {
  std::vector<int> letters;
  letters.reserve(rank.num_positive_roots());
  for (int j = 1; j <= rank.value(); ++j)
    for (int i = j; i >= 1; --i) letters.push_back(i);
  return LongWord(rank, std::move(letters));
}

SignedRootVector reflect(const SignedRootVector& v, int i) {
  // s_i(v) = v - <v, alpha_i^vee> alpha_i with the A_r Cartan pairing.
  const int r = static_cast<int>(v.size());
  if (i < 1 || i > r) throw std::out_of_range("simple index out of range");
  const int left = i > 1 ? v(i - 1) : 0;
  const int right = i < r ? v(i + 1) : 0;
  SignedRootVector out = v;
  out(i) = left + right - v(i);
  return out;
}

namespace {

// A positive root of A_r has 0/1 coordinates forming one contiguous block.
bool as_interval(const SignedRootVector& v, Interval& out) {
  int first = 0, last = 0;
  for (int i = 1; i <= static_cast<int>(v.size()); ++i) {
    const int c = v(i);
    if (c != 0 && c != 1) return false;
    if (c == 1) {
      if (first == 0) first = i;
      else if (last != i - 1) return false;
      last = i;
    }
  }
  if (first == 0) return false;
  out = {first, last};
  return true;
}

}  // namespace

std::vector<Interval> word_roots(Rank rank, std::span<const int> letters) {
  std::vector<Interval> roots;
  roots.reserve(letters.size());
  std::set<Interval> seen;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const int ik = letters[k];
    if (ik < 1 || ik > rank.value())
      throw InvalidWord("letter " + std::to_string(ik) + " out of range at position " +
                        std::to_string(k + 1));
    SignedRootVector beta(rank);
    beta(ik) = 1;
    for (std::size_t m = k; m-- > 0;) beta = reflect(beta, letters[m]);
    Interval root;
    if (!as_interval(beta, root))
      throw InvalidWord("beta_" + std::to_string(k + 1) + " is not a positive root");
    if (!seen.insert(root).second)
      throw InvalidWord("beta_" + std::to_string(k + 1) + " repeats root " + to_string(root));
    roots.push_back(root);
  }
  return roots;
}

std::vector<Interval> word_roots(const LongWord& word) {
  return {word.roots().begin(), word.roots().end()};
}

LongWord::LongWord(Rank rank, std::vector<int> letters)
    : rank_(rank), letters_(std::move(letters)) {
  if (static_cast<int>(letters_.size()) != rank.num_positive_roots())
    throw InvalidWord("long word must have " + std::to_string(rank.num_positive_roots()) +
                      " letters, got " + std::to_string(letters_.size()));
  roots_ = word_roots(rank_, letters_);
}

std::string to_string(Interval root) {
  return "[" + std::to_string(root.a) + "," + std::to_string(root.b) + "]";
}

}  // namespace gk
