#include <random>

#include "doctest.h"
#include "valence/unipoly.hpp"

using namespace valence;

namespace {

UniPoly from_roots(const std::vector<long>& roots) {
  UniPoly p{1};
  for (long r : roots) p = p * UniPoly{-r, 1};
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const UniPoly a{1, 2, 3};  // 3z^2 + 2z + 1
  CHECK(a.degree() == 2);
  CHECK(a(Integer(2)) == 17);
  CHECK(a.derivative() == UniPoly{2, 6});
  CHECK((a - a).is_zero());
  CHECK((a * UniPoly{0, 1}) == UniPoly{0, 1, 2, 3});
  CHECK(a.to_string() == "3 z^2 + 2 z + 1");
  CHECK(UniPoly{1, 0, 0} == UniPoly{1});
}

TEST_CASE("division helpers") {
  const UniPoly f = from_roots({-1, -2, -2});
  CHECK(exact_quotient(f, UniPoly{2, 1}) == from_roots({-1, -2}));
  CHECK_THROWS_AS(exact_quotient(f, UniPoly{3, 1}), std::domain_error);
  CHECK(gcd(f, from_roots({-2, 5})) == UniPoly{2, 1});
  CHECK(squarefree_part(f) == from_roots({-1, -2}));
  CHECK(primitive_part(UniPoly{-4, -6}) == UniPoly{2, 3});
}

TEST_CASE("negative-root counts on polynomials with known roots") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> root(-9, 9), count(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> roots;
    for (long i = count(rng); i > 0; --i) roots.push_back(root(rng));
    std::set<long> negative;
    for (long r : roots) {
      if (r < 0) negative.insert(r);
    }
    const UniPoly p = from_roots(roots);
    CHECK(count_negative_roots(p) == negative.size());
    const RootReport rep = analyze_roots(p);
    const bool all_nonpos = std::all_of(roots.begin(), roots.end(), [](long r) { return r <= 0; });
    CHECK(rep.all_real_nonpositive == all_nonpos);
    CHECK(rep.zero_root_multiplicity == std::count(roots.begin(), roots.end(), 0L));
  }
}

TEST_CASE("complex roots are detected") {
  // (z^2 + 1)(z + 3) and (z^2 + z + 1): all coefficients positive, not real-rooted.
  CHECK_FALSE(sturm_all_roots_real_negative(UniPoly{1, 0, 1} * UniPoly{3, 1}));
  CHECK_FALSE(sturm_all_roots_real_negative(UniPoly{1, 1, 1}));
  CHECK(sturm_all_roots_real_negative(UniPoly{5, 7, 1}));  // discriminant 29
  CHECK_FALSE(sturm_all_roots_real_negative(UniPoly{0, 2, 1}));  // root at 0
  CHECK(analyze_roots(UniPoly{0, 2, 1}).all_real_nonpositive);
  CHECK(sturm_all_roots_real_negative(UniPoly{1}));
  CHECK_THROWS(sturm_all_roots_real_negative(UniPoly{}));
}

TEST_CASE("sturm sequence shape") {
  const UniPoly p = from_roots({-1, -3, -4});
  const auto seq = sturm_sequence(p);
  REQUIRE(seq.size() >= 2);
  CHECK(seq.back().degree() == 0);
  for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i].degree() < seq[i - 1].degree());
}

TEST_CASE("from_multipoly") {
  const Universe U{"z", "w"};
  const MultiPoly z = MultiPoly::variable(U, "z");
  CHECK(UniPoly::from_multipoly(z * z + MultiPoly::constant(U, 3), "z") == UniPoly{3, 0, 1});
  CHECK_THROWS(UniPoly::from_multipoly(z + MultiPoly::variable(U, "w"), "z"));
}
