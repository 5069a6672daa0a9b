#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients over a fixed, named variable universe.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace valence {

using Integer = mpz_class;

inline constexpr std::size_t kMaxVars = 16;

/// Ordered list of distinct variable names. Two universes are equal iff they
/// list the same names in the same order.
class Universe {
 public:
  Universe();
  Universe(std::initializer_list<std::string> names);
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::invalid_argument if the name is not in the universe.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  bool operator==(const Universe& other) const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Fixed-capacity exponent vector; slots beyond the universe arity stay zero.
struct Exponents {
  std::array<std::uint8_t, kMaxVars> e{};

  std::uint8_t& operator[](std::size_t i) { return e[i]; }
  std::uint8_t operator[](std::size_t i) const { return e[i]; }
  unsigned total() const;

  auto operator<=>(const Exponents&) const = default;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& x) const noexcept;
};

class MultiPoly {
 public:
  using Term = std::pair<Exponents, Integer>;

  MultiPoly() = default;
  explicit MultiPoly(Universe universe) : universe_(std::move(universe)) {}

  static MultiPoly constant(Universe universe, const Integer& c);
  static MultiPoly variable(Universe universe, std::string_view name);
  static MultiPoly monomial(Universe universe, const Exponents& exps, const Integer& c = 1);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static MultiPoly from_terms(Universe universe, std::vector<Term> terms);

  const Universe& universe() const { return universe_; }
  /// Terms sorted by exponent vector, lexicographically ascending; no zero
  /// coefficients.
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Exponents& exps) const;
  Integer coefficient_sum() const;
  unsigned degree_in(std::size_t var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Integer& c);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Integer& c) { return lhs *= c; }
  friend MultiPoly operator*(const Integer& c, MultiPoly rhs) { return rhs *= c; }

  bool operator==(const MultiPoly& other) const;

 private:
  void require_same_universe(const MultiPoly& other, const char* op) const;
  MultiPoly& merge(const MultiPoly& rhs, int sign);

  Universe universe_;
  std::vector<Term> terms_;
};

using Bindings = std::map<std::string, MultiPoly>;

/// Replaces each bound variable by its image; unbound variables map to the
/// same-named variable of `target`. Every image must live in `target`. A
/// variable that is neither bound nor present in `target` may only occur with
/// exponent zero.
MultiPoly substitute(const MultiPoly& p, const Bindings& bindings, const Universe& target);
inline MultiPoly substitute(const MultiPoly& p, const Bindings& bindings) {
  return substitute(p, bindings, p.universe());
}

/// Rewrites `p` over `target`, matching variables by name.
MultiPoly change_universe(const MultiPoly& p, const Universe& target);

/// Exact quotient (p - q) / (var - 1). Throws std::domain_error when p - q does
/// not vanish at var = 1.
MultiPoly divided_difference(const MultiPoly& p, const MultiPoly& q, std::string_view var = "u");

/// Divides every term by `var`. Throws std::domain_error if some term lacks it.
MultiPoly exact_div_var(const MultiPoly& p, std::string_view var);

/// perm[i] is the universe index that variable i is sent to.
MultiPoly permute(const MultiPoly& p, std::span<const std::size_t> perm);
bool is_symmetric(const MultiPoly& p, std::span<const std::size_t> perm);
/// Permutation given by name pairs (a -> b); unnamed variables are fixed.
std::vector<std::size_t> permutation(const Universe& u,
                                     const std::vector<std::pair<std::string, std::string>>& images);

/// Projection of the support onto `vars` (in the order given).
std::set<std::vector<unsigned>> support(const MultiPoly& p, std::span<const std::string> vars);
/// (min, max) total degree in `vars` over the terms of p; (0, 0) for p = 0.
std::pair<unsigned, unsigned> degree_range(const MultiPoly& p, std::span<const std::string> vars);

/// Human-readable form, e.g. "u^2 v x + u v^2 ybar + u v y". Terms are
/// ordered by decreasing total degree, ties broken reverse-lexicographically.
std::string to_text(const MultiPoly& p);

/// Inverse of to_text; also accepts '*' between factors. Throws
/// std::invalid_argument on malformed input or unknown variables.
MultiPoly parse_poly(std::string_view text, const Universe& universe);

/// JSON list of {"coeff": int, "exp": {"var": int, ...}} sorted by exponent
/// vector lexicographically. Coefficients outside int64 are emitted as strings.
nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j, const Universe& universe);

}  // namespace valence
