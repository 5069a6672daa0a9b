#pragma once

// Bounded-n verification suites. Each check returns a CheckReport; a failing
// report always names a witness (an interval, a coefficient, a poset).

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "valence/distribution.hpp"
#include "valence/multipoly.hpp"
#include "valence/series_solver.hpp"
#include "valence/tamari.hpp"

namespace valence {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckReport {
  std::string id;
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // non-empty whenever status == Fail
  double seconds = 0;
  std::vector<std::string> details;

  bool passed() const { return status == CheckStatus::Pass; }
};

/// With `timings` false the wall time is left out so that output is
/// reproducible byte for byte.
nlohmann::json to_json(const CheckReport& r, bool timings = false);
std::string summary_line(const CheckReport& r, bool timings = false);

/// Known prefixes, index 0 first.
struct ReferenceSequences {
  /// Tamari intervals, n = 1..8.
  static constexpr std::array<std::uint64_t, 8> intervals{1, 3, 13, 68, 399, 2530, 16965, 118668};
  /// OEIS A000139, n = 1..7 (synchronous intervals).
  static constexpr std::array<std::uint64_t, 7> a000139{1, 2, 6, 22, 91, 408, 1938};
  /// OEIS A000257 prefix; alignment with n is found by brute force.
  static constexpr std::array<std::uint64_t, 6> a000257{1, 3, 12, 56, 288, 1584};
  /// OEIS A001006 (Motzkin) prefix; alignment found by brute force.
  static constexpr std::array<std::uint64_t, 7> a001006{1, 1, 2, 4, 9, 21, 51};
};

/// Index k such that seq[k] == first and seq[k + 1] == second.
std::optional<std::size_t> align_sequence(std::span<const std::uint64_t> seq, std::uint64_t first,
                                          std::uint64_t second);

/// Lazily computed lattices, interval statistics, DD_n and solver outputs,
/// shared by the checks. Not thread-safe.
class Workbench {
 public:
  explicit Workbench(unsigned threads = 1) : threads_(threads) {}

  const TamariLattice& lattice(std::size_t n);
  const std::vector<IntervalRecord>& records(std::size_t n, bool with_q = false);
  /// DD_n over {x, y, ybar, xbar}, from brute force unless overridden.
  const MultiPoly& dd(std::size_t n);
  const SolverOutput& solver(SystemMode mode, std::size_t truncation);

  /// Replaces DD_n for every later check (mutation testing).
  void override_dd(std::size_t n, MultiPoly p) { dd_[n] = std::move(p); }

 private:
  unsigned threads_;
  std::map<std::size_t, TamariLattice> lattices_;
  std::map<std::pair<std::size_t, bool>, std::vector<IntervalRecord>> records_;
  std::map<std::size_t, MultiPoly> dd_;
  std::map<std::pair<SystemMode, std::size_t>, SolverOutput> solver_;
};

// Upper bounds on n for each check; larger requests are clamped with a note.
inline constexpr std::size_t kSymmetryMaxN = 8;
inline constexpr std::size_t kXXbarMaxN = 8;
inline constexpr std::size_t kTriangleMaxN = 6;
inline constexpr std::size_t kPrintedTablesMaxN = 5;
inline constexpr std::size_t kPerIntervalMaxN = 7;
inline constexpr std::size_t kChainMaxN = 6;
inline constexpr std::size_t kAntichainMaxN = 6;
inline constexpr std::size_t kStructurePosets = 200;
inline constexpr std::size_t kStructureMaxElements = 6;

/// Printed coefficient matrices of D_{Int(Tam_n)}(a, abar), n = 1..5, rows
/// from the top; printed[r][c] is the coefficient of a^c abar^(n-1-r).
const std::vector<std::vector<std::vector<std::uint64_t>>>& printed_triangles();
/// Printed (y, ybar) / (LL, RR) tables, n = 1..5, in display orientation.
const std::vector<std::vector<std::vector<std::uint64_t>>>& printed_canopy_tables();

CheckReport check_ternary_symmetry(Workbench& wb, std::size_t n_max);
CheckReport check_x_xbar_conjecture(Workbench& wb, std::size_t n_max);
CheckReport check_support_triangle(Workbench& wb, std::size_t n_max = 5);
CheckReport check_synchronous_theorem(Workbench& wb, std::size_t n_max);
CheckReport check_degree_properties(Workbench& wb, std::size_t n_max);
CheckReport check_distribution_equalities(Workbench& wb, std::size_t n_max);
CheckReport check_remaining_conjectures(Workbench& wb, std::size_t n_max);
CheckReport check_real_rootedness(Workbench& wb, std::size_t n_max);
/// Printed expansions, brute force against the series, q-analogue, canopy
/// specialization, and the two alternative identities.
CheckReport check_series_routes(Workbench& wb, std::size_t n_max);
/// Duality, products, Int(P*) ~ Int(P)*, specialization and degree-0 lemmas
/// on seeded random posets. n_max is ignored.
CheckReport check_structure(Workbench& wb, std::size_t n_max = 0);

/// symmetry, xbar, triangle, synchronous, degree, distribution, conjectures,
/// roots, routes, structure.
const std::vector<std::string>& suite_ids();
bool is_suite_id(std::string_view id);

/// Runs the named suites ("all" expands to every suite) in suite_ids() order.
/// Throws std::invalid_argument on an unknown id.
std::vector<CheckReport> run_suites(Workbench& wb, const std::vector<std::string>& ids,
                                    std::size_t n_max);

}  // namespace valence
