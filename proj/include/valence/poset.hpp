#pragma once

// Finite posets given by their Hasse diagram, interval posets, and the
// valence polynomials D_P (two variables) and DD_P (four variables).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "valence/multipoly.hpp"

namespace valence {

class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Cover = std::pair<std::size_t, std::size_t>;

/// Elements are 0..m-1. Immutable after construction; the order relation is
/// materialized as a bit matrix so that leq() is O(1).
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Validates indices, acyclicity and the Hasse property (no declared cover
  /// is implied by a chain of other covers). Throws PosetError.
  static FinitePoset build(std::size_t m, std::span<const Cover> covers);
  static FinitePoset build(std::size_t m, const std::vector<Cover>& covers) {
    return build(m, std::span<const Cover>(covers));
  }

  std::size_t size() const { return m_; }
  /// Sorted, duplicate-free.
  const std::vector<Cover>& covers() const { return covers_; }
  std::span<const std::size_t> up(std::size_t a) const { return up_[a]; }
  std::span<const std::size_t> down(std::size_t a) const { return down_[a]; }

  bool leq(std::size_t a, std::size_t b) const {
    return (closure_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool is_cover(std::size_t a, std::size_t b) const;
  bool is_minimal(std::size_t a) const { return down_[a].empty(); }
  bool is_maximal(std::size_t a) const { return up_[a].empty(); }

  /// A linear extension: every cover (a, b) has a before b.
  const std::vector<std::size_t>& topological_order() const { return topo_; }

  bool operator==(const FinitePoset& other) const {
    return m_ == other.m_ && covers_ == other.covers_;
  }

 private:
  std::size_t m_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> up_, down_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> closure_;
  std::vector<std::size_t> topo_;
};

struct IntervalId {
  std::size_t lo = 0;
  std::size_t hi = 0;
  auto operator<=>(const IntervalId&) const = default;
};

/// The four kinds of Hasse edges of Int(P) incident to an interval (u, v):
/// X raises u inside [u, v], Y raises v, YBar lowers u, XBar lowers v staying
/// above u.
enum class EdgeClass { X, Y, YBar, XBar };

struct IntervalDegrees {
  unsigned dx = 0, dy = 0, dybar = 0, dxbar = 0;

  unsigned operator[](EdgeClass c) const;
  auto operator<=>(const IntervalDegrees&) const = default;
};

FinitePoset dual(const FinitePoset& p);

/// Element (a, b) has index a * |Q| + b.
FinitePoset product(const FinitePoset& p, const FinitePoset& q);

/// All (u, v) with u <= v, in lexicographic (lo, hi) order.
std::vector<IntervalId> intervals(const FinitePoset& p);

struct IntervalPoset {
  FinitePoset poset;
  std::vector<IntervalId> intervals;  // index -> (lo, hi)
};

IntervalPoset interval_poset(const FinitePoset& p);

IntervalDegrees classify_interval_edges(const FinitePoset& p, IntervalId iv);

Universe valence_universe();           // {a, abar}
Universe interval_valence_universe();  // {x, y, ybar, xbar}

/// sum_u a^out(u) abar^in(u)
MultiPoly valence_poly_D(const FinitePoset& p);
/// sum over intervals of x^dx y^dy ybar^dybar xbar^dxbar
MultiPoly valence_poly_DD(const FinitePoset& p);
MultiPoly valence_poly_DD(std::span<const IntervalDegrees> degrees);

/// {"m": int, "covers": [[a, b], ...]}
nlohmann::json to_json(const FinitePoset& p);
FinitePoset poset_from_json(const nlohmann::json& j);

}  // namespace valence
