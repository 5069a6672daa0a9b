#pragma once

// Truncated power series in t whose coefficients are MultiPoly values.

#include <cstddef>
#include <functional>
#include <vector>

#include "valence/multipoly.hpp"
#include "valence/unipoly.hpp"

namespace valence {

/// sum_{k < order} c_k t^k, all c_k over a common universe (which excludes t).
class SeriesT {
 public:
  SeriesT() = default;
  SeriesT(Universe universe, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const Universe& universe() const { return universe_; }

  const MultiPoly& operator[](std::size_t k) const { return coeffs_.at(k); }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  void set(std::size_t k, MultiPoly c);

  /// Constant series c (coefficient of t^0).
  static SeriesT constant(const MultiPoly& c, std::size_t order);

  SeriesT& operator+=(const SeriesT& rhs);
  SeriesT& operator-=(const SeriesT& rhs);
  friend SeriesT operator+(SeriesT a, const SeriesT& b) { return a += b; }
  friend SeriesT operator-(SeriesT a, const SeriesT& b) { return a -= b; }
  /// Cauchy product truncated at the smaller order.
  friend SeriesT operator*(const SeriesT& a, const SeriesT& b);
  /// Multiplies every coefficient by a polynomial free of t.
  friend SeriesT operator*(const MultiPoly& c, const SeriesT& s);
  /// Multiplies by a polynomial in t with integer coefficients.
  SeriesT times_t_poly(const UniPoly& tp) const;

  SeriesT map(const std::function<MultiPoly(const MultiPoly&)>& f) const;
  bool is_zero() const;

  bool operator==(const SeriesT& other) const = default;

 private:
  Universe universe_;
  std::vector<MultiPoly> coeffs_;
};

/// Applies `substitute` coefficient-wise.
SeriesT substitute(const SeriesT& s, const Bindings& bindings, const Universe& target);
inline SeriesT substitute(const SeriesT& s, const Bindings& bindings) {
  return substitute(s, bindings, s.universe());
}

/// Series with the sum of coefficients of each c_k (all variables set to 1).
std::vector<Integer> coefficient_sums(const SeriesT& s);

/// {"N": int, "coeffs": [poly, ...]}
nlohmann::json to_json(const SeriesT& s);
SeriesT series_from_json(const nlohmann::json& j, const Universe& universe);

}  // namespace valence
