#pragma once

// Marginally large tableaux: the T(infinity) model of B(infinity) in type A.
//
// An element is stored through its reduced form as the counts n[j][k], the
// number of k-boxes in row j (1 <= j < k <= r+1). Those counts determine the
// full tableau uniquely: row r+1 is empty and row j opens with
// |row j+1| + 1 required j-boxes followed by the variable boxes in
// increasing letter order.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gk/roots.hpp"

namespace gk {

class MLTableau {
 public:
  /// The highest weight element b_infinity (all counts zero).
  explicit MLTableau(Rank rank);

  Rank rank() const noexcept { return rank_; }
  int r() const noexcept { return rank_.value(); }

  /// Number of k-boxes in row j of the reduced form, 1 <= j < k <= r+1.
  int count(int j, int k) const { return counts_.at(index(j, k)); }
  /// Throws std::invalid_argument if `value` is negative.
  void set_count(int j, int k, int value);
  MLTableau with_count(int j, int k, int value) const;

  /// Counts in row-major (j, k) order.
  const std::vector<int>& counts() const noexcept { return counts_; }

  /// Total number of boxes in row j of the full tableau (row r+1 has 0).
  int row_length(int j) const;
  /// Number of variable boxes in row j.
  int variable_length(int j) const;

  auto operator<=>(const MLTableau&) const = default;

 private:
  std::size_t index(int j, int k) const;

  Rank rank_;
  std::vector<int> counts_;
};

MLTableau highest(Rank rank);

/// Weight, then counts lexicographically.
struct CanonicalLess {
  bool operator()(const MLTableau& lhs, const MLTableau& rhs) const;
};

struct MLTableauHash {
  std::size_t operator()(const MLTableau& b) const noexcept;
};

/// Tableau given by explicit rows. Not necessarily in T(infinity): general
/// semistandard tableaux are accepted for the signature kernel.
struct FullTableau {
  std::vector<std::vector<int>> rows;

  bool operator==(const FullTableau&) const = default;
};

bool is_semistandard(const FullTableau& t);
/// Hong-Lee conditions: r rows, alphabet 1..r+1, semistandard, row j starts
/// with j, and #j-boxes in row j = |row j+1| + 1.
bool in_t_infinity(const FullTableau& t, Rank rank);

FullTableau materialize(const MLTableau& b);
/// Inverse of materialize. Throws std::invalid_argument unless
/// in_t_infinity(t, rank).
MLTableau reduce(const FullTableau& t, Rank rank);

struct Box {
  int letter;
  int row;  // 1-based
  int col;  // 1-based

  bool operator==(const Box&) const = default;
};

/// Far-Eastern reading: columns right to left, each column top to bottom.
using BoxWord = std::vector<Box>;

BoxWord reading_word(const FullTableau& t);

/// Result of the i-signature rule over a box word. `raw` has +1 for letter i,
/// -1 for letter i+1, 0 otherwise; `reduced` is `raw` with every cancelled
/// (+,-) pair zeroed. Targets index into the word.
struct Signature {
  std::vector<int> raw;
  std::vector<int> reduced;
  std::optional<std::size_t> e_target;  // rightmost surviving -
  std::optional<std::size_t> f_target;  // leftmost surviving +
};

Signature signature(const BoxWord& word, int i);

struct TableauSignature {
  BoxWord word;
  Signature sig;
};

/// i-signature of the materialized tableau.
TableauSignature i_signature(const MLTableau& b, int i);

/// Plain Kashiwara operators on a fixed-shape tableau (the B(lambda) rule):
/// change the signature target and return nullopt when it is absent.
std::optional<FullTableau> f_tilde_fixed_shape(const FullTableau& t, int i);
std::optional<FullTableau> e_tilde_fixed_shape(const FullTableau& t, int i);

/// Reference T(infinity) procedures on full tableaux: signature rule, then
/// column insertion (f) or removal (e) when marginal largeness breaks.
FullTableau f_procedure(const FullTableau& t, int i, Rank rank);
std::optional<FullTableau> e_procedure(const FullTableau& t, int i, Rank rank);

/// Kashiwara operators on counts. These locate the acting box from the boxes
/// with letters i and i+1 only and update the counts directly.
MLTableau f(const MLTableau& b, int i);
std::optional<MLTableau> e(const MLTableau& b, int i);

/// Largest m with e_i^m b != 0.
int e_string_length(const MLTableau& b, int i);

/// -wt(b) in simple-root coordinates: a k-box in row j contributes
/// alpha_j + ... + alpha_{k-1}.
RootVector weight_neg(const MLTableau& b);

/// Number of k-segments (rows of the reduced form holding a k-box).
int seg_k(const MLTableau& b, int k);
int seg(const MLTableau& b);

/// Total number of k-boxes over all k-segments.
int segment_boxes(const MLTableau& b, int k);

enum class TableauMode { reduced, full, automatic };

/// Grammar: rows separated by '/', each a comma-separated list of letters,
/// or '*' for an empty variable row (reduced mode only). Whitespace is
/// ignored. In automatic mode the text is read as full iff every row starts
/// with its own row index. The number of rows is the rank.
MLTableau parse_tableau(std::string_view text, TableauMode mode = TableauMode::automatic);
std::string format_tableau(const MLTableau& b, TableauMode mode = TableauMode::reduced);
std::string format_full(const FullTableau& t);

}  // namespace gk
