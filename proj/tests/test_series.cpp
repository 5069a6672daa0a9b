#include "doctest.h"
#include "valence/series.hpp"

using namespace valence;

namespace {

const Universe U{"u"};

SeriesT geometric(std::size_t N) {
  SeriesT s(U, N);
  for (std::size_t k = 0; k < N; ++k) s.set(k, MultiPoly::constant(U, 1));
  return s;
}

}  // namespace

TEST_CASE("cauchy product truncates at the smaller order") {
  const SeriesT g = geometric(6);
  const SeriesT sq = g * g;  // 1/(1-t)^2
  REQUIRE(sq.order() == 6);
  for (std::size_t k = 0; k < 6; ++k) CHECK(sq[k] == MultiPoly::constant(U, static_cast<long>(k + 1)));
  CHECK((g * geometric(3)).order() == 3);
}

TEST_CASE("times_t_poly and residual-style identities") {
  const SeriesT g = geometric(8);
  // (1 - t) * 1/(1-t) = 1
  const SeriesT one = g.times_t_poly(UniPoly{1, -1});
  CHECK(one == SeriesT::constant(MultiPoly::constant(U, 1), 8));
}

TEST_CASE("t is not a coefficient variable") { CHECK_THROWS(SeriesT(Universe{"t"}, 3)); }

TEST_CASE("map, substitute and sums") {
  SeriesT s(U, 3);
  const MultiPoly u = MultiPoly::variable(U, "u");
  s.set(1, u);
  s.set(2, u * u + Integer(2) * u);
  const auto sums = coefficient_sums(s);
  CHECK(sums == std::vector<Integer>{0, 1, 3});
  const SeriesT at1 = substitute(s, {{"u", MultiPoly::constant(U, 1)}});
  CHECK(at1[2] == MultiPoly::constant(U, 3));
  CHECK((u * s)[1] == u * u);
  CHECK(s.map([](const MultiPoly& c) { return c + c; })[2] == Integer(2) * s[2]);
}

TEST_CASE("json round trip") {
  SeriesT s(U, 3);
  s.set(2, MultiPoly::variable(U, "u"));
  const auto j = to_json(s);
  CHECK(j["N"] == 3);
  CHECK(series_from_json(j, U) == s);
}
