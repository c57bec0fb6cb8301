#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "wurst/io.hpp"

using namespace wurst;

namespace {

void check_labels_equal(const SimplicialSet& a, const SimplicialSet& b) {
  REQUIRE(a.has_labels() == b.has_labels());
  if (!a.has_labels()) return;
  for (int n = 0; n <= a.cap(); ++n)
    for (SimplexId x = 0; x < a.size(n); ++x) CHECK(a.label(n, x) == b.label(n, x));
}

}  // namespace

TEST_CASE("simplicial sets round-trip") {
  const std::vector<SimplicialSet> corpus{SimplicialSet(), standard_simplex(0, 2), standard_simplex(2, 3), boundary(2, 3),
                                          horn(3, 1, 3), q_space(2, 1, 3), suspension(boundary(1, 3)).carrier,
                                          product(standard_simplex(1, 2), boundary(1, 2))};
  for (const auto& x : corpus) {
    const auto back = simplicial_set_from_json(to_json(x));
    CHECK(back == x);
    check_labels_equal(back, x);
    CHECK(to_json(back) == to_json(x));
  }
}

TEST_CASE("bisimplicial sets round-trip") {
  for (int n = 0; n <= 2; ++n) {
    const auto b = cut(n, BiRange::square(2)).set;
    const auto back = bisimplicial_set_from_json(to_json(b));
    CHECK(back == b);
    CHECK(to_json(back) == to_json(b));
  }
  const auto tri = box(standard_simplex(1, 3), boundary(1, 3), BiRange::triangle(3));
  CHECK(bisimplicial_set_from_json(to_json(tri)) == tri);
}

TEST_CASE("maps, pointed objects and categories round-trip") {
  const auto f = boundary_inclusion(2, 3);
  const auto g = simplicial_map_from_json(to_json(f));
  CHECK(g == f);
  CHECK(g.source() == f.source());
  CHECK(g.target() == f.target());

  const auto k = directed_join(1, 2, 3);
  const auto k2 = pointed_directed_from_json(to_json(k));
  CHECK(k2.carrier == k.carrier);
  CHECK(k2.base0 == k.base0);
  CHECK(k2.base1 == k.base1);

  for (const auto& c : {free_directed(standard_simplex(1, 2)), coherent_simplex(2, 2)}) {
    const auto back = enriched_category_from_json(to_json(c));
    REQUIRE(back.objects == c.objects);
    CHECK(back.identity == c.identity);
    for (int x = 0; x < c.objects; ++x)
      for (int y = 0; y < c.objects; ++y) {
        CHECK(back.map[x][y] == c.map[x][y]);
        for (int z = 0; z < c.objects; ++z) CHECK(back.comp[x][y][z] == c.comp[x][y][z]);
      }
  }
  const auto short_form = enriched_category_from_json(Json{{"free_directed", to_json(boundary(1, 2))}});
  CHECK(short_form.objects == 2);
  CHECK(short_form.map[0][1] == boundary(1, 2));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(simplicial_set_from_json(Json::array()), InputError);
  CHECK_THROWS_AS(simplicial_set_from_json(Json{{"cap", 1}}), InputError);
  auto j = to_json(standard_simplex(1, 2));
  j["face"][1][0][0] = 7;
  CHECK_THROWS_AS(simplicial_set_from_json(j), InputError);
  j = to_json(standard_simplex(1, 2));
  j["levels"] = "three";
  CHECK_THROWS_AS(simplicial_set_from_json(j), InputError);

  auto m = to_json(boundary_inclusion(1, 2));
  m["components"][0][0] = 1;
  m["components"][0][1] = 0;
  CHECK_THROWS_AS(simplicial_map_from_json(m), InputError);

  auto p = to_json(directed_join(1, 1, 2));
  p["base1"] = p["base0"];
  CHECK_THROWS_AS(pointed_directed_from_json(p), InputError);

  auto c = to_json(coherent_simplex(1, 2));
  c["identities"][0] = 1000;
  CHECK_THROWS_AS(enriched_category_from_json(c), InputError);
  c = to_json(coherent_simplex(1, 2));
  c["maps"].erase(0);
  CHECK_THROWS_AS(enriched_category_from_json(c), InputError);

  CHECK_THROWS_AS(read_json_file("/nonexistent/wurst.json"), InputError);
}

TEST_CASE("files round-trip") {
  const auto path = (std::filesystem::temp_directory_path() / "wurst_io_test.json").string();
  const auto x = q_space(1, 1, 3);
  write_json_file(path, to_json(x));
  CHECK(simplicial_set_from_json(read_json_file(path)) == x);
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("{ not json", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(read_json_file(path), InputError);
  std::filesystem::remove(path);
}
