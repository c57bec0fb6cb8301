#include "wurst/coherent.hpp"

namespace wurst {

namespace {

SimplicialMap empty_map(const SimplicialSet& source, const SimplicialSet& target) {
  return SimplicialMap(source, target, MapComponents(static_cast<std::size_t>(source.cap()) + 1));
}

}  // namespace

std::optional<std::string> EnrichedCategory::check_laws() const {
  const int cap = this->cap();
  for (int x = 0; x < objects; ++x)
    for (int y = 0; y < objects; ++y)
      for (int k = 0; k <= cap; ++k)
        for (SimplexId f = 0; f < map[x][y].size(k); ++f) {
          if (compose(x, y, y, k, map[y][y].constant(k, identity[y]), f) != f ||
              compose(x, x, y, k, f, map[x][x].constant(k, identity[x])) != f)
            return "unit law fails for (" + std::to_string(x) + "," + std::to_string(y) + ")";
          for (int z = 0; z < objects; ++z)
            for (SimplexId g = 0; g < map[y][z].size(k); ++g) {
              const SimplexId gf = compose(x, y, z, k, g, f);
              for (int w = 0; w < objects; ++w)
                for (SimplexId h = 0; h < map[z][w].size(k); ++h)
                  if (compose(x, z, w, k, h, gf) != compose(x, y, w, k, compose(y, z, w, k, h, g), f))
                    return "associativity fails for (" + std::to_string(x) + "," + std::to_string(y) + "," +
                           std::to_string(z) + "," + std::to_string(w) + ")";
            }
        }
  return std::nullopt;
}

EnrichedCategory make_enriched(int objects, std::vector<std::vector<SimplicialSet>> map,
                               std::vector<std::vector<std::vector<SimplicialMap>>> comp,
                               std::vector<SimplexId> identity) {
  const auto n = static_cast<std::size_t>(objects);
  if (objects < 1 || map.size() != n || comp.size() != n || identity.size() != n)
    throw InputError("enriched category: shape mismatch");
  for (std::size_t x = 0; x < n; ++x) {
    if (map[x].size() != n || comp[x].size() != n) throw InputError("enriched category: shape mismatch");
    for (std::size_t y = 0; y < n; ++y) {
      if (map[x][y].cap() != map[0][0].cap()) throw InputError("enriched category: mapping complexes differ in cap");
      if (comp[x][y].size() != n) throw InputError("enriched category: shape mismatch");
      for (std::size_t z = 0; z < n; ++z) {
        const auto& c = comp[x][y][z];
        if (!(c.source() == product(map[y][z], map[x][y])) || !(c.target() == map[x][z]))
          throw InputError("enriched category: composition has the wrong source or target");
      }
    }
    if (identity[x] >= map[x][x].size(0)) throw InputError("enriched category: identity is not a vertex");
  }
  EnrichedCategory c{objects, std::move(map), std::move(comp), std::move(identity)};
  if (auto err = c.check_laws()) throw InputError("enriched category: " + *err);
  return c;
}

EnrichedCategory free_directed(const SimplicialSet& k) {
  const int cap = k.cap();
  const auto pt = standard_simplex(0, cap), none = empty_set(cap);
  std::vector<std::vector<SimplicialSet>> map{{pt, k}, {none, pt}};
  std::vector<std::vector<std::vector<SimplicialMap>>> comp(2, std::vector<std::vector<SimplicialMap>>(2));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        const auto src = product(map[y][z], map[x][y]);
        const auto& dst = map[x][z];
        if (src.empty())
          comp[x][y].push_back(empty_map(src, dst));
        else if (x == y && y == z)
          comp[x][y].push_back(terminal_map(src));
        else if (x == y)  // C(0,1) x C(0,0)
          comp[x][y].push_back(projection_first(src, map[y][z], map[x][y]));
        else  // C(1,1) x C(0,1)
          comp[x][y].push_back(projection_second(src, map[y][z], map[x][y]));
      }
  return make_enriched(2, std::move(map), std::move(comp), {0, 0});
}

EnrichedCategory coherent_simplex(int n, int cap) {
  const auto size = static_cast<std::size_t>(n) + 1;
  const auto none = empty_set(cap);
  std::vector<std::vector<SimplicialSet>> map(size, std::vector<SimplicialSet>(size, none));
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) map[a][b] = coherent_cube(n, a, b, cap);
  std::vector<std::vector<std::vector<SimplicialMap>>> comp(size, std::vector<std::vector<SimplicialMap>>(size));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int c = 0; c <= n; ++c) {
        if (a <= b && b <= c)
          comp[a][b].push_back(cube_composition(a, b, c, cap));
        else
          comp[a][b].push_back(empty_map(product(map[b][c], map[a][b]), map[a][c]));
      }
  return make_enriched(n + 1, std::move(map), std::move(comp), std::vector<SimplexId>(size, 0));
}

}  // namespace wurst
