#pragma once

// Dense univariate integer polynomials and exact real-root counting by Sturm
// sequences.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "valence/multipoly.hpp"

namespace valence {

class UniPoly {
 public:
  UniPoly() = default;
  /// coeffs[i] is the coefficient of z^i; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Integer> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  /// Reads a polynomial of `p` in the single variable `var`; throws if any
  /// other variable occurs.
  static UniPoly from_multipoly(const MultiPoly& p, std::string_view var);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  const Integer& leading() const { return c_.back(); }

  Integer operator()(const Integer& z) const;
  UniPoly derivative() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  bool operator==(const UniPoly& other) const = default;

  std::string to_string(std::string_view var = "z") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Content-free copy with positive leading coefficient.
UniPoly primitive_part(const UniPoly& p);
/// Positive multiple of the remainder of a by b (b nonzero).
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b);
/// Exact quotient a / b; throws std::domain_error if b does not divide a in Z[z].
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);
/// Primitive gcd with positive leading coefficient.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);

/// Sturm chain p, p', -rem(p, p'), ... with each member reduced to its
/// primitive part (positive rescaling keeps the sign pattern).
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Distinct real roots of p in (-inf, 0). p must be nonzero.
std::size_t count_negative_roots(const UniPoly& p);

struct RootReport {
  long degree = 0;
  unsigned zero_root_multiplicity = 0;
  std::size_t distinct_negative_roots = 0;
  /// Degree of the square-free part of p / z^k.
  long distinct_nonzero_roots = 0;
  bool all_real_nonpositive = false;
  bool all_real_negative = false;
};

RootReport analyze_roots(const UniPoly& p);

/// True iff every complex root of p is real and strictly negative. Throws
/// std::invalid_argument on the zero polynomial.
bool sturm_all_roots_real_negative(const UniPoly& p);

}  // namespace valence
