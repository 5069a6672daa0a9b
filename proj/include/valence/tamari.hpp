#pragma once

// Plane binary trees, the Tamari lattice Tam_n built from right rotations,
// canopies, left-border decompositions and per-interval statistics.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "valence/poset.hpp"

namespace valence {

/// A plane binary tree stored as its preorder word: '1' for an internal node,
/// '0' for a leaf. Dropping the final '0' gives a Dyck word; ordering and
/// equality are those of the word.
class PlaneBinaryTree {
 public:
  PlaneBinaryTree() : code_("0") {}

  static PlaneBinaryTree leaf() { return {}; }
  static PlaneBinaryTree node(const PlaneBinaryTree& left, const PlaneBinaryTree& right);
  /// Throws std::invalid_argument on a malformed word.
  static PlaneBinaryTree from_code(std::string code);
  /// Text form: leaf "o", node "(L R)".
  static PlaneBinaryTree parse(std::string_view text);
  /// No left children; the minimum of Tam_n.
  static PlaneBinaryTree right_comb(std::size_t n);
  /// No right children; the maximum of Tam_n.
  static PlaneBinaryTree left_comb(std::size_t n);

  const std::string& code() const { return code_; }
  std::size_t size() const { return code_.size() / 2; }
  bool is_leaf() const { return code_.size() == 1; }
  PlaneBinaryTree left() const;
  PlaneBinaryTree right() const;

  std::string to_string() const;

  auto operator<=>(const PlaneBinaryTree&) const = default;

 private:
  explicit PlaneBinaryTree(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

std::ostream& operator<<(std::ostream& os, const PlaneBinaryTree& t);

/// Word over {L, R}: leaf i (left to right) is L iff it is a left child.
using Canopy = std::string;

enum class DoubleLetter { LL, LR, RR };
using IntervalCanopyWord = std::vector<DoubleLetter>;
std::string to_string(const IntervalCanopyWord& w);

using Composition = std::vector<std::size_t>;

/// All Catalan(n) trees, sorted by preorder word. 1 <= n <= 12.
std::vector<PlaneBinaryTree> enumerate_trees(std::size_t n);

/// Upper covers: A^(B^C) -> (A^B)^C at every node whose right child is
/// internal.
std::vector<PlaneBinaryTree> rotation_covers(const PlaneBinaryTree& t);

Canopy canopy(const PlaneBinaryTree& t);

/// Throws std::invalid_argument if sizes differ or a position reads (R, L),
/// which cannot happen for an interval.
IntervalCanopyWord interval_canopy_word(const PlaneBinaryTree& s, const PlaneBinaryTree& t);
bool is_synchronous(const PlaneBinaryTree& s, const PlaneBinaryTree& t);

/// Maximal factorization t = S_0 / S_1 / ... / S_l, where A / B grafts the
/// root of A on the leftmost leaf of B. S_l holds the root of t.
std::vector<PlaneBinaryTree> left_border_decompose(const PlaneBinaryTree& t);
PlaneBinaryTree left_border_compose(const std::vector<PlaneBinaryTree>& factors);
Composition composition(const PlaneBinaryTree& t);
/// True iff every partial sum of `coarse` is a partial sum of `fine`.
bool is_coarser(const Composition& coarse, const Composition& fine);

/// Left-right mirror image.
PlaneBinaryTree reverse(const PlaneBinaryTree& t);

struct TamariLattice {
  std::size_t n = 0;
  std::vector<PlaneBinaryTree> trees;  // element index -> tree
  FinitePoset poset;

  std::size_t index_of(const PlaneBinaryTree& t) const;
  std::size_t minimum() const { return index_of(PlaneBinaryTree::right_comb(n)); }
  std::size_t maximum() const { return index_of(PlaneBinaryTree::left_comb(n)); }

 private:
  friend TamariLattice tamari_lattice(std::size_t n);
  std::unordered_map<std::string, std::size_t> index_;
};

/// 1 <= n <= 10.
TamariLattice tamari_lattice(std::size_t n);

IntervalCanopyWord interval_canopy_word(const TamariLattice& lattice, IntervalId iv);

struct IntervalRecord {
  IntervalId iv;
  IntervalDegrees deg;
  std::optional<unsigned> q;  // longest chain from lo to hi
  unsigned ll = 0;            // #LL - 1
  unsigned rr = 0;            // #RR - 1
  bool sync = false;
};

struct StatisticsOptions {
  bool with_q = false;
  unsigned threads = 1;
};

inline constexpr std::size_t kMaxStatisticsN = 9;
inline constexpr std::size_t kMaxChainN = 7;

/// One record per interval, in lexicographic (lo, hi) order. Throws
/// std::invalid_argument for n > 9, or n > 7 when q is requested.
std::vector<IntervalRecord> interval_statistics(const TamariLattice& lattice,
                                                const StatisticsOptions& options = {});

/// CSV with header n,lo,hi,dx,dy,dybar,dxbar,q,ll,rr,sync; trees in text form.
void write_statistics_csv(std::ostream& os, const TamariLattice& lattice,
                          const std::vector<IntervalRecord>& records);

}  // namespace valence
