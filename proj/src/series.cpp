#include "valence/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace valence {

SeriesT::SeriesT(Universe universe, std::size_t order)
    : universe_(std::move(universe)), coeffs_(order, MultiPoly(universe_)) {
  if (universe_.contains("t")) {
    throw std::invalid_argument("series coefficient universe must not contain t");
  }
}

void SeriesT::set(std::size_t k, MultiPoly c) {
  if (!(c.universe() == universe_)) throw std::invalid_argument("series coefficient universe mismatch");
  coeffs_.at(k) = std::move(c);
}

SeriesT SeriesT::constant(const MultiPoly& c, std::size_t order) {
  SeriesT s(c.universe(), order);
  if (order > 0) s.coeffs_[0] = c;
  return s;
}

SeriesT& SeriesT::operator+=(const SeriesT& rhs) {
  if (!(universe_ == rhs.universe_)) throw std::invalid_argument("series universe mismatch");
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

SeriesT& SeriesT::operator-=(const SeriesT& rhs) {
  if (!(universe_ == rhs.universe_)) throw std::invalid_argument("series universe mismatch");
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

SeriesT operator*(const SeriesT& a, const SeriesT& b) {
  if (!(a.universe_ == b.universe_)) throw std::invalid_argument("series universe mismatch");
  SeriesT r(a.universe_, std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < r.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < r.order(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

SeriesT operator*(const MultiPoly& c, const SeriesT& s) {
  SeriesT r = s;
  for (auto& k : r.coeffs_) k = c * k;
  return r;
}

SeriesT SeriesT::times_t_poly(const UniPoly& tp) const {
  SeriesT r(universe_, order());
  for (std::size_t d = 0; d < tp.coeffs().size(); ++d) {
    if (sgn(tp[d]) == 0) continue;
    for (std::size_t k = 0; k + d < order(); ++k) {
      r.coeffs_[k + d] += coeffs_[k] * tp[d];
    }
  }
  return r;
}

SeriesT SeriesT::map(const std::function<MultiPoly(const MultiPoly&)>& f) const {
  if (coeffs_.empty()) return *this;
  std::vector<MultiPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(f(c));
  SeriesT r(out.front().universe(), out.size());
  for (std::size_t k = 0; k < out.size(); ++k) r.set(k, std::move(out[k]));
  return r;
}

bool SeriesT::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly& c) { return c.is_zero(); });
}

SeriesT substitute(const SeriesT& s, const Bindings& bindings, const Universe& target) {
  SeriesT r(target, s.order());
  for (std::size_t k = 0; k < s.order(); ++k) r.set(k, substitute(s[k], bindings, target));
  return r;
}

std::vector<Integer> coefficient_sums(const SeriesT& s) {
  std::vector<Integer> out;
  for (const auto& c : s.coeffs()) out.push_back(c.coefficient_sum());
  return out;
}

nlohmann::json to_json(const SeriesT& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"N", s.order()}, {"coeffs", coeffs}};
}

SeriesT series_from_json(const nlohmann::json& j, const Universe& universe) {
  const auto order = j.at("N").get<std::size_t>();
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != order) throw std::invalid_argument("series JSON: coeffs length != N");
  SeriesT s(universe, order);
  for (std::size_t k = 0; k < order; ++k) s.set(k, poly_from_json(coeffs[k], universe));
  return s;
}

}  // namespace valence
