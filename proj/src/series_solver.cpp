#include "valence/series_solver.hpp"

#include <stdexcept>

namespace valence {

std::string to_string(SystemMode mode) {
  switch (mode) {
    case SystemMode::Full:
      return "full";
    case SystemMode::QAnalogue:
      return "q";
    case SystemMode::Canopy:
      return "canopy";
    case SystemMode::SynchronousRestricted:
      return "sync";
    case SystemMode::BicubicRestricted:
      return "bicubic";
  }
  return "?";
}

SystemMode parse_mode(std::string_view name) {
  for (auto m : {SystemMode::Full, SystemMode::QAnalogue, SystemMode::Canopy,
                 SystemMode::SynchronousRestricted, SystemMode::BicubicRestricted}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

Universe universe_for(SystemMode mode) {
  switch (mode) {
    case SystemMode::Full:
      return {"u", "v", "x", "y", "ybar"};
    case SystemMode::QAnalogue:
      return {"u", "v", "x", "y", "ybar", "q"};
    case SystemMode::Canopy:
      return {"u", "LL", "RR"};
    case SystemMode::SynchronousRestricted:
      return {"u"};
    case SystemMode::BicubicRestricted:
      return {"u", "v"};
  }
  throw std::logic_error("unreachable");
}

bool has_two_catalytic_variables(SystemMode mode) {
  return mode == SystemMode::Full || mode == SystemMode::QAnalogue ||
         mode == SystemMode::BicubicRestricted;
}

namespace {

struct Specializer {
  explicit Specializer(const Universe& u) : U(u), one(MultiPoly::constant(u, 1)) {
    if (U.contains("v")) {
      to_vv = {{"u", var("v")}};
      to_u1 = {{"v", one}};
      to_11 = {{"u", one}, {"v", one}};
      to_uu = {{"v", var("u")}};
    } else {
      to_11 = {{"u", one}};
    }
    if (U.contains("q")) to_qu = {{"u", var("q") * var("u")}};
  }

  MultiPoly var(std::string_view name) const { return MultiPoly::variable(U, name); }

  Universe U;
  MultiPoly one;
  Bindings to_vv, to_u1, to_11, to_uu, to_qu;
};

// Sum_{i=1}^{k-1} left[i] * right[k-i]; left[0] and right[0] vanish.
MultiPoly convolution(const std::vector<MultiPoly>& left, const SeriesT& right, std::size_t k,
                      const Universe& U) {
  MultiPoly acc(U);
  for (std::size_t i = 1; i < k; ++i) {
    if (left[i].is_zero() || right[k - i].is_zero()) continue;
    acc += left[i] * right[k - i];
  }
  return acc;
}

SolverOutput solve_two_catalytic(const SystemConfig& config) {
  const std::size_t N = config.truncation;
  const bool q_mode = config.mode == SystemMode::QAnalogue;
  const bool bicubic = config.mode == SystemMode::BicubicRestricted;
  const Universe U = universe_for(config.mode);
  const Specializer sp(U);
  const MultiPoly u = sp.var("u"), v = sp.var("v");

  SeriesT phi(U, N), theta(U, N);
  std::vector<MultiPoly> phi_vv(N, MultiPoly(U)), phi_u1(N, MultiPoly(U)),
      phi_11(N, MultiPoly(U)), phi_uu(N, MultiPoly(U));

  for (std::size_t k = 1; k < N; ++k) {
    const std::size_t prev = k - 1;
    MultiPoly inner = k == 1 ? u : MultiPoly(U);
    if (k >= 2) {
      MultiPoly low = divided_difference(phi_u1[prev], phi_11[prev], "u");
      if (bicubic) {
        inner += u * low + phi_uu[prev];
      } else {
        const MultiPoly x = sp.var("x"), y = sp.var("y");
        MultiPoly high = divided_difference(phi_uu[prev], phi_u1[prev], "u");
        MultiPoly diag = phi_uu[prev];
        if (q_mode) {
          low = substitute(low, sp.to_qu);
          high = substitute(high, sp.to_qu);
          diag = exact_div_var(substitute(diag, sp.to_qu), "q");
        }
        inner += y * u * low + x * y * u * high + (x - x * y) * diag;
      }
    }
    theta.set(k, v * inner);

    MultiPoly glued = exact_div_var(convolution(phi_vv, theta, k, U), "v");
    if (!bicubic) glued = sp.var("ybar") * glued;
    phi.set(k, theta[k] + glued);

    phi_vv[k] = substitute(phi[k], sp.to_vv);
    phi_u1[k] = substitute(phi[k], sp.to_u1);
    phi_11[k] = substitute(phi[k], sp.to_11);
    phi_uu[k] = substitute(phi[k], sp.to_uu);
  }

  SolverOutput out{config, phi, theta, SeriesT(U, N), SeriesT(U, N), SeriesT(U, N)};
  for (std::size_t k = 0; k < N; ++k) {
    out.phi_11.set(k, phi_11[k]);
    out.phi_u1->set(k, phi_u1[k]);
    out.phi_uu.set(k, phi_uu[k]);
  }
  return out;
}

SolverOutput solve_one_catalytic(const SystemConfig& config) {
  const std::size_t N = config.truncation;
  const bool canopy = config.mode == SystemMode::Canopy;
  const Universe U = universe_for(config.mode);
  const Specializer sp(U);
  const MultiPoly u = sp.var("u");

  SeriesT phi(U, N), theta(U, N);
  std::vector<MultiPoly> phi_at1(N, MultiPoly(U));

  for (std::size_t k = 1; k < N; ++k) {
    const std::size_t prev = k - 1;
    MultiPoly inner = k == 1 ? u : MultiPoly(U);
    if (k >= 2) {
      const MultiPoly dd = divided_difference(phi[prev], phi_at1[prev], "u");
      if (canopy) {
        const MultiPoly ll = sp.var("LL");
        inner += u * ll * dd + (sp.one - ll) * phi[prev];
      } else {
        inner += u * dd - phi[prev];
      }
    }
    theta.set(k, u * inner);

    MultiPoly glued = exact_div_var(convolution(phi.coeffs(), theta, k, U), "u");
    if (canopy) glued = sp.var("RR") * glued;
    phi.set(k, theta[k] + glued);
    phi_at1[k] = substitute(phi[k], sp.to_11);
  }

  SolverOutput out{config, phi, theta, SeriesT(U, N), std::nullopt, phi};
  for (std::size_t k = 0; k < N; ++k) out.phi_11.set(k, phi_at1[k]);
  return out;
}

void require_full_like(const SolverOutput& out, const char* what) {
  if (out.config.mode != SystemMode::Full && out.config.mode != SystemMode::QAnalogue) {
    throw std::invalid_argument(std::string(what) + " needs full or q-analogue output");
  }
}

}  // namespace

SolverOutput solve(const SystemConfig& config) {
  if (config.truncation < 1) throw std::invalid_argument("truncation order must be >= 1");
  if (has_two_catalytic_variables(config.mode)) return solve_two_catalytic(config);
  return solve_one_catalytic(config);
}

bool check_alternative_phi(const SolverOutput& out) {
  require_full_like(out, "check_alternative_phi");
  const Universe& U = out.phi.universe();
  const Specializer sp(U);
  const SeriesT theta_vv = substitute(out.theta, sp.to_vv);
  const SeriesT product = theta_vv * out.phi;
  const MultiPoly ybar = sp.var("ybar");
  try {
    const SeriesT glued = product.map([&](const MultiPoly& c) { return ybar * exact_div_var(c, "v"); });
    return out.phi == out.theta + glued;
  } catch (const std::domain_error&) {
    return false;
  }
}

bool check_bridge(const SolverOutput& out) {
  require_full_like(out, "check_bridge");
  const Universe& U = out.phi.universe();
  const Specializer sp(U);
  const std::size_t N = out.phi.order();
  const SeriesT phi_uu = substitute(out.phi, sp.to_uu);
  const SeriesT phi_u1 = substitute(out.phi, sp.to_u1);
  const SeriesT phi_11 = substitute(out.phi, sp.to_11);
  const MultiPoly ybar = sp.var("ybar");
  const SeriesT lhs = (SeriesT::constant(sp.var("u"), N) + ybar * phi_uu) * phi_u1;
  const SeriesT rhs = phi_uu * (SeriesT::constant(sp.one, N) + ybar * phi_11);
  return lhs == rhs;
}

AlgebraicEquation synchronous_cubic() {
  return {{
      UniPoly{0, -1, 8},   // 8 t^2 - t
      UniPoly{1, -10, 12}, // 12 F t^2 - 10 F t + F
      UniPoly{0, 2, 6},    // 6 F^2 t^2 + 2 F^2 t
      UniPoly{0, 0, 1},    // F^3 t^2
  }};
}

AlgebraicEquation bicubic_quadratic() {
  return {{
      UniPoly{0, -1, 9},    // 9 t^2 - t
      UniPoly{1, -12, 24},  // 24 F t^2 - 12 F t + F
      UniPoly{0, 0, 16},    // 16 F^2 t^2
  }};
}

SeriesT residual(const SeriesT& series, const AlgebraicEquation& equation) {
  const std::size_t N = series.order();
  const MultiPoly one = MultiPoly::constant(series.universe(), 1);
  SeriesT power = SeriesT::constant(one, N);
  SeriesT acc(series.universe(), N);
  for (std::size_t k = 0; k < equation.coefficients.size(); ++k) {
    if (k > 0) power = power * series;
    acc += power.times_t_poly(equation.coefficients[k]);
  }
  return acc;
}

}  // namespace valence
