#include "doctest.h"
#include "valence/verify.hpp"

using namespace valence;

namespace {

bool any_failure(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == CheckStatus::Fail) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("every suite passes at desk scale") {
  Workbench wb;
  const auto reports = run_suites(wb, {"all"}, 7);
  CHECK(reports.size() == suite_ids().size());
  for (const auto& r : reports) {
    INFO(summary_line(r));
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.witness.empty());
  }
}

TEST_CASE("individual checks and clamping") {
  Workbench wb;
  const auto sym = check_ternary_symmetry(wb, 3);
  CHECK(sym.passed());
  CHECK(sym.n_max == 3);
  const auto tri = check_support_triangle(wb, 9);
  CHECK(tri.passed());
  CHECK(tri.n_max == kTriangleMaxN);
  CHECK(tri.details.front().find("clamped") != std::string::npos);
  bool echoed = false;
  for (const auto& d : tri.details) echoed = echoed || d == "n=3: 1 3 2 / 0 3 3 / 0 0 1";
  CHECK(echoed);
  CHECK(check_real_rootedness(wb, 1).passed());
  CHECK(check_x_xbar_conjecture(wb, 0).status == CheckStatus::Skipped);
}

TEST_CASE("small-n values") {
  Workbench wb;
  const auto syn = check_synchronous_theorem(wb, 4);
  CHECK(syn.passed());
  CHECK(std::find(syn.details.begin(), syn.details.end(), "n=2: 2 synchronous intervals") != syn.details.end());
  CHECK(std::find(syn.details.begin(), syn.details.end(), "n=3: 6 synchronous intervals") != syn.details.end());
  const auto deg = check_degree_properties(wb, 4);
  CHECK(std::find(deg.details.begin(), deg.details.end(), "n=3: 12 intervals with dx+dy+dybar = n-1") !=
        deg.details.end());
  const auto roots = check_real_rootedness(wb, 3);
  CHECK(std::find(roots.details.begin(), roots.details.end(),
                  "n=3: DD_n(z,1,1,1) = z^2 + 7 z + 5; distinct negative roots 2 of 2 nonzero; zero root "
                  "multiplicity 0") != roots.details.end());
}

TEST_CASE("sequence alignment") {
  CHECK(align_sequence(ReferenceSequences::a000257, 3, 12) == 1);
  CHECK(align_sequence(ReferenceSequences::a001006, 1, 2) == 1);
  CHECK(align_sequence(ReferenceSequences::a001006, 1, 1) == 0);
  CHECK_FALSE(align_sequence(ReferenceSequences::a000139, 5, 7).has_value());
}

TEST_CASE("unknown suites are rejected") {
  Workbench wb;
  CHECK_THROWS_AS(run_suites(wb, {"nosuch"}, 3), std::invalid_argument);
  CHECK(is_suite_id("all"));
  CHECK_FALSE(is_suite_id("nosuch"));
}

TEST_CASE("reports are reproducible") {
  Workbench a, b;
  const auto ra = run_suites(a, {"all"}, 5);
  const auto rb = run_suites(b, {"all"}, 5);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) CHECK(to_json(ra[i]).dump() == to_json(rb[i]).dump());
  CHECK_FALSE(to_json(ra[0]).contains("seconds"));
  CHECK(to_json(ra[0], true).contains("seconds"));
}

TEST_CASE("any single-coefficient corruption of DD_n is caught") {
  Workbench wb;
  const std::vector<std::string> readers{"symmetry", "xbar", "triangle", "synchronous", "roots", "routes"};
  for (std::size_t n : {2, 3, 4}) {
    const MultiPoly good = wb.dd(n);
    const Universe& U = good.universe();
    std::vector<Exponents> targets;
    for (const auto& [e, c] : good.terms()) targets.push_back(e);
    Exponents fresh;
    fresh[0] = 1;
    fresh[1] = 1;
    fresh[2] = 1;
    fresh[3] = 1;
    targets.push_back(fresh);
    for (const auto& e : targets) {
      for (int delta : {-1, 1}) {
        if (delta < 0 && good.coefficient(e) == 0) continue;
        wb.override_dd(n, good + MultiPoly::monomial(U, e, delta));
        const auto reports = run_suites(wb, readers, n);
        INFO("n=" << n << " monomial " << to_text(MultiPoly::monomial(U, e)) << " delta " << delta);
        CHECK(any_failure(reports));
        for (const auto& r : reports) {
          if (r.status == CheckStatus::Fail) CHECK_FALSE(r.witness.empty());
        }
      }
    }
    wb.override_dd(n, good);
    CHECK_FALSE(any_failure(run_suites(wb, readers, n)));
  }
}

TEST_CASE("json shape") {
  Workbench wb;
  const auto j = to_json(check_support_triangle(wb, 2));
  CHECK(j["id"] == "triangle");
  CHECK(j["status"] == "pass");
  CHECK(j["witness"].is_null());
  CHECK(j["n_min"] == 1);
  CHECK(j["n_max"] == 2);
}
