#include <functional>
#include <map>
#include <sstream>

#include "doctest.h"
#include "valence/tamari.hpp"

using namespace valence;

namespace {

// Right-subtree sizes of the internal nodes, listed in in-order.
void right_sizes(const PlaneBinaryTree& t, std::vector<std::size_t>& out) {
  if (t.is_leaf()) return;
  right_sizes(t.left(), out);
  out.push_back(t.right().size());
  right_sizes(t.right(), out);
}

bool bracket_leq(const PlaneBinaryTree& s, const PlaneBinaryTree& t) {
  std::vector<std::size_t> a, b;
  right_sizes(s, a);
  right_sizes(t, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};

}  // namespace

TEST_CASE("codes and text form") {
  const auto t = PlaneBinaryTree::parse("((o o) (o o))");
  CHECK(t.code() == "1100100");
  CHECK(t.size() == 3);
  CHECK(t.to_string() == "((o o) (o o))");
  CHECK(t.left() == PlaneBinaryTree::parse("(o o)"));
  CHECK(PlaneBinaryTree::node(t.left(), t.right()) == t);
  CHECK(PlaneBinaryTree::right_comb(3).to_string() == "(o (o (o o)))");
  CHECK(PlaneBinaryTree::left_comb(3).to_string() == "(((o o) o) o)");
  CHECK_THROWS(PlaneBinaryTree::from_code("10"));
  CHECK_THROWS(PlaneBinaryTree::from_code("0100"));
  CHECK_THROWS(PlaneBinaryTree::parse("(o o"));
}

TEST_CASE("enumeration gives Catalan numbers, sorted and distinct") {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto trees = enumerate_trees(n);
    CHECK(trees.size() == catalan[n]);
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
    for (const auto& t : trees) CHECK(PlaneBinaryTree::parse(t.to_string()) == t);
  }
  CHECK_THROWS(enumerate_trees(0));
}

TEST_CASE("rotation is A^(B^C) -> (A^B)^C") {
  const auto covers = rotation_covers(PlaneBinaryTree::parse("(o (o o))"));
  REQUIRE(covers.size() == 1);
  CHECK(covers[0] == PlaneBinaryTree::parse("((o o) o)"));
  CHECK(rotation_covers(PlaneBinaryTree::left_comb(4)).empty());
}

TEST_CASE("order agrees with bracket vectors") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto L = tamari_lattice(n);
    CHECK(L.minimum() == L.index_of(PlaneBinaryTree::right_comb(n)));
    for (std::size_t a = 0; a < L.trees.size(); ++a) {
      CHECK(L.poset.leq(L.minimum(), a));
      CHECK(L.poset.leq(a, L.maximum()));
      for (std::size_t b = 0; b < L.trees.size(); ++b) {
        CHECK(L.poset.leq(a, b) == bracket_leq(L.trees[a], L.trees[b]));
      }
    }
  }
}

TEST_CASE("interval counts") {
  const std::vector<std::size_t> counts{1, 3, 13, 68, 399, 2530, 16965, 118668};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(intervals(tamari_lattice(n).poset).size() == counts[n - 1]);
}

TEST_CASE("canopies") {
  CHECK(canopy(PlaneBinaryTree::right_comb(3)) == "LLLR");
  CHECK(canopy(PlaneBinaryTree::left_comb(3)) == "LRRR");
  CHECK(canopy(PlaneBinaryTree::parse("((o o) (o o))")) == "LRLR");
  for (const auto& t : enumerate_trees(6)) {
    const Canopy c = canopy(t);
    CHECK(c.size() == 7);
    CHECK(c.front() == 'L');
    CHECK(c.back() == 'R');
    // Reversal swaps left and right children, so it reverses and complements.
    Canopy mirrored(c.rbegin(), c.rend());
    for (auto& ch : mirrored) ch = ch == 'L' ? 'R' : 'L';
    CHECK(canopy(reverse(t)) == mirrored);
  }
}

TEST_CASE("interval canopy words") {
  const auto L = tamari_lattice(5);
  for (std::size_t a = 0; a < L.trees.size(); ++a) {
    for (std::size_t b = 0; b < L.trees.size(); ++b) {
      if (!L.poset.leq(a, b)) continue;
      const auto w = interval_canopy_word(L, {a, b});
      CHECK(w.size() == 6);
      const Canopy s = canopy(L.trees[a]), t = canopy(L.trees[b]);
      for (std::size_t i = 0; i < w.size(); ++i) {
        const DoubleLetter expected =
            s[i] == 'L' ? (t[i] == 'L' ? DoubleLetter::LL : DoubleLetter::LR) : DoubleLetter::RR;
        CHECK(w[i] == expected);
        CHECK_FALSE((s[i] == 'R' && t[i] == 'L'));
      }
      CHECK(is_synchronous(L.trees[a], L.trees[b]) == (s == t));
    }
  }
  CHECK_THROWS(interval_canopy_word(PlaneBinaryTree::left_comb(2), PlaneBinaryTree::right_comb(2)));
  CHECK(to_string(interval_canopy_word(PlaneBinaryTree::right_comb(2), PlaneBinaryTree::left_comb(2))) ==
        "LL,LR,RR");
}

TEST_CASE("left-border decomposition") {
  CHECK(composition(PlaneBinaryTree::right_comb(4)) == Composition{4});
  CHECK(composition(PlaneBinaryTree::left_comb(4)) == Composition{1, 1, 1, 1});
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      const auto f = left_border_decompose(t);
      CHECK(left_border_compose(f) == t);
      std::size_t total = 0;
      for (const auto& s : f) {
        total += s.size();
        CHECK(left_border_decompose(s).size() == 1);
      }
      CHECK(total == n);
    }
  }
  // The bottom of an interval has a coarser composition than its top.
  const auto L = tamari_lattice(6);
  for (std::size_t a = 0; a < L.trees.size(); ++a) {
    for (std::size_t b = 0; b < L.trees.size(); ++b) {
      if (L.poset.leq(a, b)) CHECK(is_coarser(composition(L.trees[a]), composition(L.trees[b])));
    }
  }
  CHECK(is_coarser({3}, {1, 2}));
  CHECK_FALSE(is_coarser({1, 2}, {2, 1}));
}

TEST_CASE("reversal is an anti-automorphism") {
  const auto L = tamari_lattice(5);
  for (std::size_t a = 0; a < L.trees.size(); ++a) {
    CHECK(reverse(reverse(L.trees[a])) == L.trees[a]);
    for (std::size_t b = 0; b < L.trees.size(); ++b) {
      const std::size_t ra = L.index_of(reverse(L.trees[a])), rb = L.index_of(reverse(L.trees[b]));
      CHECK(L.poset.leq(a, b) == L.poset.leq(rb, ra));
    }
  }
}

TEST_CASE("interval statistics match independent recomputation") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto L = tamari_lattice(n);
    const auto recs = interval_statistics(L, {true, 1});
    CHECK(recs.size() == intervals(L.poset).size());
    std::map<std::pair<std::size_t, std::size_t>, unsigned> memo;
    std::function<unsigned(std::size_t, std::size_t)> longest = [&](std::size_t a, std::size_t b) -> unsigned {
      if (a == b) return 0;
      auto it = memo.find({a, b});
      if (it != memo.end()) return it->second;
      unsigned best = 0;
      for (std::size_t c : L.poset.up(a)) {
        if (L.poset.leq(c, b)) best = std::max(best, 1 + longest(c, b));
      }
      return memo[{a, b}] = best;
    };
    for (const auto& r : recs) {
      CHECK(r.deg == classify_interval_edges(L.poset, r.iv));
      REQUIRE(r.q.has_value());
      CHECK(*r.q == longest(r.iv.lo, r.iv.hi));
      const auto w = interval_canopy_word(L, r.iv);
      CHECK(r.ll + 1 == static_cast<unsigned>(std::count(w.begin(), w.end(), DoubleLetter::LL)));
      CHECK(r.rr + 1 == static_cast<unsigned>(std::count(w.begin(), w.end(), DoubleLetter::RR)));
      CHECK(r.sync == is_synchronous(L.trees[r.iv.lo], L.trees[r.iv.hi]));
    }
  }
}

TEST_CASE("statistics do not depend on the thread count") {
  const auto L = tamari_lattice(6);
  const auto one = interval_statistics(L, {true, 1});
  const auto many = interval_statistics(L, {true, 4});
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].iv == many[i].iv);
    CHECK(one[i].deg == many[i].deg);
    CHECK(one[i].q == many[i].q);
    CHECK(one[i].ll == many[i].ll);
  }
  CHECK_THROWS(interval_statistics(tamari_lattice(8), {true, 1}));
}

TEST_CASE("statistics csv") {
  const auto L = tamari_lattice(2);
  std::ostringstream os;
  write_statistics_csv(os, L, interval_statistics(L));
  const std::string s = os.str();
  CHECK(s.rfind("n,lo,hi,dx,dy,dybar,dxbar,q,ll,rr,sync\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 4);
}
