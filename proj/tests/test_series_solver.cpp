#include "doctest.h"
#include "valence/series_solver.hpp"
#include "valence/tamari.hpp"

using namespace valence;

namespace {

MultiPoly poly(const SolverOutput& out, const char* text) { return parse_poly(text, out.phi.universe()); }

// DD_n(x, y, ybar, 1) by brute force, over the given universe.
MultiPoly brute(std::size_t n, const Universe& U, bool with_q) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& r : interval_statistics(tamari_lattice(n), {with_q, 1})) {
    Exponents e;
    e[U.index("x")] = static_cast<std::uint8_t>(r.deg.dx);
    e[U.index("y")] = static_cast<std::uint8_t>(r.deg.dy);
    e[U.index("ybar")] = static_cast<std::uint8_t>(r.deg.dybar);
    if (with_q) e[U.index("q")] = static_cast<std::uint8_t>(*r.q);
    terms.emplace_back(e, 1);
  }
  return MultiPoly::from_terms(U, std::move(terms));
}

}  // namespace

TEST_CASE("modes and universes") {
  for (auto m : {SystemMode::Full, SystemMode::QAnalogue, SystemMode::Canopy, SystemMode::SynchronousRestricted,
                 SystemMode::BicubicRestricted}) {
    CHECK(parse_mode(to_string(m)) == m);
  }
  CHECK_THROWS(parse_mode("nosuch"));
  CHECK(universe_for(SystemMode::Full) == Universe({"u", "v", "x", "y", "ybar"}));
  CHECK(universe_for(SystemMode::Canopy) == Universe({"u", "LL", "RR"}));
  CHECK_THROWS(solve({SystemMode::Full, 0}));
  CHECK(solve({SystemMode::Full, 1}).phi.is_zero());
}

TEST_CASE("printed low-order expansions") {
  const SolverOutput out = solve({SystemMode::Full, 4});
  CHECK(out.phi[1] == poly(out, "u v"));
  CHECK(out.phi[2] == poly(out, "u^2 v x + u v^2 ybar + u v y"));
  CHECK(out.phi[3] == poly(out,
                           "u^3 v x^2 + u^3 v x ybar + u^2 v^2 x ybar + u v^3 x ybar + u^2 v x y ybar + u v^3 ybar^2 + "
                           "2 u^2 v x y + 2 u v^2 y ybar + u v x y + u v y^2 + u v y ybar"));
  CHECK(out.theta[2] == poly(out, "u^2 v x + u v y"));
  CHECK(out.theta[3] ==
        poly(out, "u^3 v x^2 + u^3 v x ybar + u^2 v x y ybar + 2 u^2 v x y + u v x y + u v y^2 + u v y ybar"));
  CHECK(to_text(out.phi_11[3]) == "x y ybar + x^2 + 3 x y + y^2 + 3 x ybar + 3 y ybar + ybar^2");
  CHECK(to_text(out.phi[2]) == "u^2 v x + u v^2 ybar + u v y");
}

TEST_CASE("Phi(1,1) equals brute-force DD_n(x,y,ybar,1)") {
  const SolverOutput out = solve({SystemMode::Full, 7});
  for (std::size_t n = 1; n <= 6; ++n) CHECK(out.phi_11[n] == brute(n, out.phi.universe(), false));
  const auto sums = coefficient_sums(out.phi_11);
  const std::vector<long> counts{0, 1, 3, 13, 68, 399, 2530};
  for (std::size_t n = 0; n < counts.size(); ++n) CHECK(sums[n] == counts[n]);
}

TEST_CASE("q-analogue against longest chains, and at q = 1") {
  const SolverOutput q = solve({SystemMode::QAnalogue, 6});
  for (std::size_t n = 1; n <= 5; ++n) CHECK(q.phi_11[n] == brute(n, q.phi.universe(), true));
  const SolverOutput full = solve({SystemMode::Full, 6});
  const Universe& U = full.phi.universe();
  const SeriesT at1 = substitute(q.phi, {{"q", MultiPoly::constant(U, 1)}}, U);
  CHECK(at1 == full.phi);
}

TEST_CASE("canopy system is the x = 1, v = u specialization") {
  const SolverOutput full = solve({SystemMode::Full, 8});
  const SolverOutput can = solve({SystemMode::Canopy, 8});
  const Universe& CU = can.phi.universe();
  const SeriesT specialized = substitute(full.phi_uu,
                                  {{"x", MultiPoly::constant(CU, 1)}, {"y", MultiPoly::variable(CU, "LL")},
                                   {"ybar", MultiPoly::variable(CU, "RR")}},
                                  CU);
  CHECK(specialized == can.phi);
  CHECK(!can.phi_u1.has_value());
  CHECK(can.phi_uu == can.phi);
}

TEST_CASE("alternative equation and bridge identity") {
  const SolverOutput out = solve({SystemMode::Full, 7});
  CHECK(check_alternative_phi(out));
  CHECK(check_bridge(out));
  CHECK(check_alternative_phi(solve({SystemMode::QAnalogue, 6})));

  SolverOutput broken = out;
  broken.phi.set(4, out.phi[4] + poly(out, "u v"));
  CHECK_FALSE(check_alternative_phi(broken));
  CHECK_FALSE(check_bridge(broken));
  CHECK_THROWS(check_bridge(solve({SystemMode::Canopy, 4})));
}

TEST_CASE("restricted systems satisfy their algebraic equations") {
  const SolverOutput sync = solve({SystemMode::SynchronousRestricted, 9});
  CHECK(residual(sync.phi_11, synchronous_cubic()).is_zero());
  const auto s = coefficient_sums(sync.phi_11);
  const std::vector<long> a139{0, 1, 2, 6, 22, 91, 408, 1938, 9614};
  for (std::size_t n = 0; n < a139.size(); ++n) CHECK(s[n] == a139[n]);

  const SolverOutput bic = solve({SystemMode::BicubicRestricted, 9});
  CHECK(residual(bic.phi_11, bicubic_quadratic()).is_zero());
  const auto b = coefficient_sums(bic.phi_11);
  const std::vector<long> a257{0, 1, 3, 12, 56, 288, 1584, 9152, 54912};
  for (std::size_t n = 0; n < a257.size(); ++n) CHECK(b[n] == a257[n]);

  // A perturbed series leaves a nonzero residual.
  SeriesT off = sync.phi_11;
  off.set(5, off[5] + MultiPoly::constant(off.universe(), 1));
  CHECK_FALSE(residual(off, synchronous_cubic()).is_zero());
}

TEST_CASE("the synchronous count is the top (y,ybar)-degree part of Phi(1,1)") {
  const SolverOutput full = solve({SystemMode::Full, 8});
  const SolverOutput sync = solve({SystemMode::SynchronousRestricted, 8});
  const Universe& U = full.phi.universe();
  for (std::size_t n = 1; n < 8; ++n) {
    Integer top = 0;
    for (const auto& [e, c] : full.phi_11[n].terms()) {
      if (e[U.index("y")] + e[U.index("ybar")] == n - 1) top += c;
    }
    CHECK(top == sync.phi_11[n].coefficient_sum());
  }
}
