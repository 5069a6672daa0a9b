#include "valence/poset.hpp"

#include <algorithm>
#include <string>

namespace valence {

FinitePoset FinitePoset::build(std::size_t m, std::span<const Cover> covers) {
  FinitePoset p;
  p.m_ = m;
  p.covers_.assign(covers.begin(), covers.end());
  std::sort(p.covers_.begin(), p.covers_.end());
  for (std::size_t i = 0; i < p.covers_.size(); ++i) {
    const auto [a, b] = p.covers_[i];
    if (a >= m || b >= m) {
      throw PosetError("cover (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    }
    if (a == b) throw PosetError("self-loop at " + std::to_string(a));
    if (i > 0 && p.covers_[i - 1] == p.covers_[i]) {
      throw PosetError("duplicate cover (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }

  p.up_.assign(m, {});
  p.down_.assign(m, {});
  for (const auto& [a, b] : p.covers_) {
    p.up_[a].push_back(b);
    p.down_[b].push_back(a);
  }

  // Kahn's algorithm; smallest available index first for determinism.
  std::vector<std::size_t> indeg(m);
  for (std::size_t b = 0; b < m; ++b) indeg[b] = p.down_[b].size();
  std::vector<std::size_t> ready;
  for (std::size_t a = m; a-- > 0;) {
    if (indeg[a] == 0) ready.push_back(a);
  }
  while (!ready.empty()) {
    const std::size_t a = ready.back();
    ready.pop_back();
    p.topo_.push_back(a);
    for (auto b : p.up_[a]) {
      if (--indeg[b] == 0) ready.push_back(b);
    }
  }
  if (p.topo_.size() != m) throw PosetError("cover relation has a cycle");

  p.words_ = (m + 63) / 64;
  p.closure_.assign(m * p.words_, 0);
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    const std::size_t a = *it;
    std::uint64_t* row = &p.closure_[a * p.words_];
    row[a / 64] |= std::uint64_t{1} << (a % 64);
    for (auto b : p.up_[a]) {
      const std::uint64_t* other = &p.closure_[b * p.words_];
      for (std::size_t w = 0; w < p.words_; ++w) row[w] |= other[w];
    }
  }

  // Hasse property: (a, b) is not a cover if some other cover (a, c) has c <= b.
  for (const auto& [a, b] : p.covers_) {
    for (auto c : p.up_[a]) {
      if (c != b && p.leq(c, b)) {
        throw PosetError("cover (" + std::to_string(a) + "," + std::to_string(b) +
                         ") is implied by transitivity through " + std::to_string(c));
      }
    }
  }
  return p;
}

bool FinitePoset::is_cover(std::size_t a, std::size_t b) const {
  return std::binary_search(covers_.begin(), covers_.end(), Cover{a, b});
}

unsigned IntervalDegrees::operator[](EdgeClass c) const {
  switch (c) {
    case EdgeClass::X:
      return dx;
    case EdgeClass::Y:
      return dy;
    case EdgeClass::YBar:
      return dybar;
    case EdgeClass::XBar:
      return dxbar;
  }
  return 0;
}

FinitePoset dual(const FinitePoset& p) {
  std::vector<Cover> covers;
  covers.reserve(p.covers().size());
  for (const auto& [a, b] : p.covers()) covers.emplace_back(b, a);
  return FinitePoset::build(p.size(), covers);
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t nq = q.size();
  std::vector<Cover> covers;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < nq; ++b) {
      for (auto a2 : p.up(a)) covers.emplace_back(a * nq + b, a2 * nq + b);
      for (auto b2 : q.up(b)) covers.emplace_back(a * nq + b, a * nq + b2);
    }
  }
  return FinitePoset::build(p.size() * nq, covers);
}

std::vector<IntervalId> intervals(const FinitePoset& p) {
  std::vector<IntervalId> out;
  for (std::size_t u = 0; u < p.size(); ++u) {
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (p.leq(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

IntervalPoset interval_poset(const FinitePoset& p) {
  IntervalPoset ip;
  ip.intervals = intervals(p);
  auto index_of = [&](std::size_t u, std::size_t v) {
    auto it = std::lower_bound(ip.intervals.begin(), ip.intervals.end(), IntervalId{u, v});
    return static_cast<std::size_t>(it - ip.intervals.begin());
  };
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < ip.intervals.size(); ++i) {
    const auto [u, v] = ip.intervals[i];
    for (auto u2 : p.up(u)) {
      if (p.leq(u2, v)) covers.emplace_back(i, index_of(u2, v));
    }
    for (auto v2 : p.up(v)) covers.emplace_back(i, index_of(u, v2));
  }
  ip.poset = FinitePoset::build(ip.intervals.size(), covers);
  return ip;
}

IntervalDegrees classify_interval_edges(const FinitePoset& p, IntervalId iv) {
  const auto [u, v] = iv;
  IntervalDegrees d;
  for (auto u2 : p.up(u)) {
    if (p.leq(u2, v)) ++d.dx;
  }
  d.dy = static_cast<unsigned>(p.up(v).size());
  d.dybar = static_cast<unsigned>(p.down(u).size());
  for (auto v2 : p.down(v)) {
    if (p.leq(u, v2)) ++d.dxbar;
  }
  return d;
}

Universe valence_universe() {
  static const Universe u{"a", "abar"};
  return u;
}

Universe interval_valence_universe() {
  static const Universe u{"x", "y", "ybar", "xbar"};
  return u;
}

MultiPoly valence_poly_D(const FinitePoset& p) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t a = 0; a < p.size(); ++a) {
    Exponents e;
    e[0] = static_cast<std::uint8_t>(p.up(a).size());
    e[1] = static_cast<std::uint8_t>(p.down(a).size());
    terms.emplace_back(e, 1);
  }
  return MultiPoly::from_terms(valence_universe(), std::move(terms));
}

MultiPoly valence_poly_DD(std::span<const IntervalDegrees> degrees) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(degrees.size());
  for (const auto& d : degrees) {
    Exponents e;
    e[0] = static_cast<std::uint8_t>(d.dx);
    e[1] = static_cast<std::uint8_t>(d.dy);
    e[2] = static_cast<std::uint8_t>(d.dybar);
    e[3] = static_cast<std::uint8_t>(d.dxbar);
    terms.emplace_back(e, 1);
  }
  return MultiPoly::from_terms(interval_valence_universe(), std::move(terms));
}

MultiPoly valence_poly_DD(const FinitePoset& p) {
  std::vector<IntervalDegrees> degrees;
  for (const auto& iv : intervals(p)) degrees.push_back(classify_interval_edges(p, iv));
  return valence_poly_DD(degrees);
}

nlohmann::json to_json(const FinitePoset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
  return {{"m", p.size()}, {"covers", covers}};
}

FinitePoset poset_from_json(const nlohmann::json& j) {
  std::vector<Cover> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw PosetError("cover must be a pair");
    covers.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
  }
  return FinitePoset::build(j.at("m").get<std::size_t>(), covers);
}

}  // namespace valence
