#include "doctest.h"
#include "valence/distribution.hpp"

using namespace valence;

TEST_CASE("stat names") {
  for (auto s : {Stat::X, Stat::Y, Stat::YBar, Stat::XBar, Stat::Q, Stat::LL, Stat::RR}) {
    CHECK(parse_stat(to_string(s)) == s);
  }
  CHECK_THROWS(parse_stat("z"));
}

TEST_CASE("tables from interval records") {
  const auto L = tamari_lattice(3);
  const auto recs = interval_statistics(L);
  const auto t = distribution(recs, Stat::Y, Stat::YBar);
  CHECK(t.total() == 13);
  CHECK(t.rows() == 3);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 1) == 4);
  CHECK(t.at(0, 2) == 1);
  CHECK_THROWS(distribution(recs, Stat::Q, Stat::Y));
  CHECK(distribution(recs, Stat::Y, Stat::YBar, 5, 4).rows() == 5);
}

TEST_CASE("orientations form the dihedral group of the square") {
  DistributionTable t(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) t.at(i, j) = 3 * i + j;
  }
  const auto all = all_orientations();
  CHECK(all.size() == 8);
  std::vector<DistributionTable> images;
  for (const auto& o : all) {
    const auto img = reorient(t, o);
    CHECK(img.total() == t.total());
    for (const auto& other : images) CHECK_FALSE(other == img);
    images.push_back(img);
  }
  CHECK(reorient(t, {}) == t);
  CHECK_THROWS(reorient(DistributionTable(2, 3), {}));
}

TEST_CASE("resizing and rendering") {
  DistributionTable t(2, 2);
  t.at(0, 1) = 5;
  CHECK(t.resized(3, 3).at(0, 1) == 5);
  CHECK_THROWS(t.resized(1, 1));
  CHECK(to_csv(t) == "0,5\n0,0\n");
  CHECK(to_text(t) == "0 5\n0 0\n");
  CHECK(to_json(t).dump() == "[[0,5],[0,0]]");
}
