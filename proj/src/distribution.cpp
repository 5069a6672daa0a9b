#include "valence/distribution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace valence {

std::string to_string(Stat s) {
  switch (s) {
    case Stat::X:
      return "x";
    case Stat::Y:
      return "y";
    case Stat::YBar:
      return "ybar";
    case Stat::XBar:
      return "xbar";
    case Stat::Q:
      return "q";
    case Stat::LL:
      return "ll";
    case Stat::RR:
      return "rr";
  }
  return "?";
}

Stat parse_stat(std::string_view name) {
  for (auto s : {Stat::X, Stat::Y, Stat::YBar, Stat::XBar, Stat::Q, Stat::LL, Stat::RR}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

unsigned stat_value(const IntervalRecord& r, Stat s) {
  switch (s) {
    case Stat::X:
      return r.deg.dx;
    case Stat::Y:
      return r.deg.dy;
    case Stat::YBar:
      return r.deg.dybar;
    case Stat::XBar:
      return r.deg.dxbar;
    case Stat::Q:
      if (!r.q) throw std::invalid_argument("record has no longest-chain statistic");
      return *r.q;
    case Stat::LL:
      return r.ll;
    case Stat::RR:
      return r.rr;
  }
  return 0;
}

std::uint64_t DistributionTable::total() const {
  std::uint64_t s = 0;
  for (auto c : cells_) s += c;
  return s;
}

DistributionTable DistributionTable::resized(std::size_t rows, std::size_t cols) const {
  DistributionTable out(rows, cols);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) == 0) continue;
      if (i >= rows || j >= cols) throw std::invalid_argument("resize would drop nonzero cells");
      out.at(i, j) = at(i, j);
    }
  }
  return out;
}

DistributionTable distribution(std::span<const IntervalRecord> records, Stat first, Stat second,
                               std::size_t min_rows, std::size_t min_cols) {
  std::size_t rows = min_rows, cols = min_cols;
  for (const auto& r : records) {
    rows = std::max<std::size_t>(rows, stat_value(r, first) + 1);
    cols = std::max<std::size_t>(cols, stat_value(r, second) + 1);
  }
  DistributionTable t(rows, cols);
  for (const auto& r : records) ++t.at(stat_value(r, first), stat_value(r, second));
  return t;
}

std::vector<Orientation> all_orientations() {
  std::vector<Orientation> out;
  for (bool tr : {false, true}) {
    for (bool fr : {false, true}) {
      for (bool fc : {false, true}) out.push_back({tr, fr, fc});
    }
  }
  return out;
}

DistributionTable reorient(const DistributionTable& t, Orientation o) {
  if (t.rows() != t.cols()) throw std::invalid_argument("reorient needs a square table");
  const std::size_t n = t.rows();
  DistributionTable out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t r = o.transpose ? j : i;
      std::size_t c = o.transpose ? i : j;
      if (o.flip_rows) r = n - 1 - r;
      if (o.flip_cols) c = n - 1 - c;
      out.at(r, c) = t.at(i, j);
    }
  }
  return out;
}

std::string to_text(const DistributionTable& t) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      width = std::max(width, std::to_string(t.at(i, j)).size());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const std::string cell = std::to_string(t.at(i, j));
      if (j) os << ' ';
      os << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string to_csv(const DistributionTable& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) os << (j ? "," : "") << t.at(i, j);
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const DistributionTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < t.cols(); ++j) row.push_back(t.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace valence
