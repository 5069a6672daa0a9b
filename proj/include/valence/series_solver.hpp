#pragma once

// Order-by-order solution of the catalytic functional equations for the
// generating series Phi (all Tamari intervals) and Theta (indecomposable
// ones), plus residual checks of algebraic equations satisfied by Phi(1,1).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valence/multipoly.hpp"
#include "valence/series.hpp"
#include "valence/unipoly.hpp"

namespace valence {

enum class SystemMode {
  Full,                   // u, v, x, y, ybar
  QAnalogue,              // Full plus q (longest chain)
  Canopy,                 // u, LL, RR; single catalytic variable
  SynchronousRestricted,  // x = y = ybar = 1, v = u, without the x Phi(u,u) term
  BicubicRestricted,      // x = y = ybar = 1, minimal (x, y, ybar)-degree
};

std::string to_string(SystemMode mode);
/// Accepts full, q, canopy, sync, bicubic. Throws std::invalid_argument.
SystemMode parse_mode(std::string_view name);

inline constexpr std::size_t kDefaultTruncation = 9;

struct SystemConfig {
  SystemMode mode = SystemMode::Full;
  /// Exclusive order in t; coefficients t^0 .. t^(N-1) are computed.
  std::size_t truncation = kDefaultTruncation;
};

Universe universe_for(SystemMode mode);
/// True for modes with both catalytic variables u and v.
bool has_two_catalytic_variables(SystemMode mode);

struct SolverOutput {
  SystemConfig config;
  SeriesT phi;    // Phi(u,v), or Phi(u) for single-catalytic modes
  SeriesT theta;  // Theta(u,v), or Theta(u)
  SeriesT phi_11;
  std::optional<SeriesT> phi_u1;  // absent for single-catalytic modes
  SeriesT phi_uu;
};

/// Throws std::invalid_argument for N < 1 and std::domain_error if an exact
/// division in the recursion fails.
SolverOutput solve(const SystemConfig& config);

/// Phi(u,v) = Theta(u,v) + ybar Theta(v,v) Phi(u,v) / v  mod t^N.
/// Requires Full or QAnalogue output.
bool check_alternative_phi(const SolverOutput& out);

/// (u + ybar Phi(u,u)) Phi(u,1) = Phi(u,u) (1 + ybar Phi(1,1))  mod t^N.
/// Requires Full or QAnalogue output.
bool check_bridge(const SolverOutput& out);

/// sum_k coefficients[k](t) * F^k = 0, with each coefficient a polynomial in t.
struct AlgebraicEquation {
  std::vector<UniPoly> coefficients;
};

/// F'^3 t^2 + 6 F'^2 t^2 + 2 F'^2 t + 12 F' t^2 - 10 F' t + 8 t^2 + F' - t
AlgebraicEquation synchronous_cubic();
/// 16 F''^2 t^2 + 24 F'' t^2 - 12 F'' t + 9 t^2 + F'' - t
AlgebraicEquation bicubic_quadratic();

/// Value of the equation at `series`, truncated at the series order.
SeriesT residual(const SeriesT& series, const AlgebraicEquation& equation);

}  // namespace valence
