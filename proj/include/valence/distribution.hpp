#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "valence/tamari.hpp"

namespace valence {

/// Per-interval statistics that can index a distribution table.
enum class Stat { X, Y, YBar, XBar, Q, LL, RR };

std::string to_string(Stat s);
/// Accepts x, y, ybar, xbar, q, ll, rr. Throws std::invalid_argument.
Stat parse_stat(std::string_view name);
/// Throws std::invalid_argument when asking for q on a record without it.
unsigned stat_value(const IntervalRecord& r, Stat s);

/// Exact interval counts indexed by two statistics: at(i, j) counts the
/// intervals with first statistic i and second statistic j.
class DistributionTable {
 public:
  DistributionTable() = default;
  DistributionTable(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  std::uint64_t total() const;

  /// Zero-padded or cropped copy; cropping nonzero cells throws.
  DistributionTable resized(std::size_t rows, std::size_t cols) const;

  bool operator==(const DistributionTable& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> cells_;
};

/// Table sized (max first + 1) x (max second + 1), or the given minimum shape.
DistributionTable distribution(std::span<const IntervalRecord> records, Stat first, Stat second,
                               std::size_t min_rows = 0, std::size_t min_cols = 0);

/// One of the eight symmetries of a square table: optional transpose, then
/// optional row and column reversal.
struct Orientation {
  bool transpose = false;
  bool flip_rows = false;
  bool flip_cols = false;
};

std::vector<Orientation> all_orientations();
/// Square tables only.
DistributionTable reorient(const DistributionTable& t, Orientation o);

std::string to_text(const DistributionTable& t);
std::string to_csv(const DistributionTable& t);
nlohmann::json to_json(const DistributionTable& t);

}  // namespace valence
