#include "wurst/io.hpp"

#include <fstream>

namespace wurst {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

Json components_json(const MapComponents& c) { return Json(c); }
MapComponents components_from(const Json& j) { return j.get<MapComponents>(); }

}  // namespace

Json to_json(const SimplicialSet& x) {
  const auto t = x.tables();
  Json labels = Json::object();
  for (std::size_t n = 0; n < t.labels.size(); ++n)
    if (!t.labels[n].empty()) labels[std::to_string(n)] = t.labels[n];
  return Json{{"cap", t.cap}, {"levels", t.count}, {"face", t.face}, {"degen", t.degen}, {"labels", labels}};
}

SimplicialSet simplicial_set_from_json(const Json& j) {
  return guarded("simplicial set", [&] {
    SimplicialSet::Tables t;
    t.cap = field(j, "cap").get<int>();
    t.count = field(j, "levels").get<std::vector<std::size_t>>();
    t.face = field(j, "face").get<std::vector<std::vector<std::vector<SimplexId>>>>();
    t.degen = field(j, "degen").get<std::vector<std::vector<std::vector<SimplexId>>>>();
    if (j.contains("labels") && !j.at("labels").empty()) {
      t.labels.assign(t.count.size(), {});
      for (const auto& [key, value] : j.at("labels").items()) {
        const auto n = static_cast<std::size_t>(std::stoul(key));
        if (n >= t.labels.size()) throw InputError("simplicial set: label level out of range");
        t.labels[n] = value.get<std::vector<std::string>>();
      }
      for (std::size_t n = 0; n < t.labels.size(); ++n)
        if (t.labels[n].empty() && t.count[n] > 0) throw InputError("simplicial set: labels missing for a level");
    }
    return SimplicialSet(std::move(t));
  });
}

Json to_json(const BiSimplicialSet& b) {
  const auto& t = b.tables();
  return Json{{"range", {{"ch", t.range.ch}, {"cv", t.range.cv}, {"total", t.range.total}}},
              {"levels", t.count},
              {"hface", t.hface},
              {"vface", t.vface},
              {"hdegen", t.hdegen},
              {"vdegen", t.vdegen},
              {"labels", t.labels}};
}

BiSimplicialSet bisimplicial_set_from_json(const Json& j) {
  return guarded("bisimplicial set", [&] {
    const auto& r = field(j, "range");
    BiSimplicialSet::Tables t(BiRange{field(r, "ch").get<int>(), field(r, "cv").get<int>(), field(r, "total").get<int>()});
    using Grid = BiSimplicialSet::Grid<BiSimplicialSet::OpTables>;
    t.count = field(j, "levels").get<BiSimplicialSet::Grid<std::size_t>>();
    t.hface = field(j, "hface").get<Grid>();
    t.vface = field(j, "vface").get<Grid>();
    t.hdegen = field(j, "hdegen").get<Grid>();
    t.vdegen = field(j, "vdegen").get<Grid>();
    if (j.contains("labels")) t.labels = j.at("labels").get<BiSimplicialSet::Grid<std::vector<std::string>>>();
    return BiSimplicialSet(std::move(t));
  });
}

Json to_json(const SimplicialMap& f) {
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", components_json(f.components())}};
}

SimplicialMap simplicial_map_from_json(const Json& j) {
  return guarded("simplicial map", [&] {
    return SimplicialMap(simplicial_set_from_json(field(j, "source")), simplicial_set_from_json(field(j, "target")),
                         components_from(field(j, "components")));
  });
}

Json to_json(const PointedDirected& k) {
  return Json{{"carrier", to_json(k.carrier)}, {"base0", k.base0}, {"base1", k.base1}};
}

PointedDirected pointed_directed_from_json(const Json& j) {
  return guarded("pointed directed", [&] {
    PointedDirected k{simplicial_set_from_json(field(j, "carrier")), field(j, "base0").get<SimplexId>(),
                      field(j, "base1").get<SimplexId>()};
    if (k.base0 >= k.carrier.size(0) || k.base1 >= k.carrier.size(0) || k.base0 == k.base1)
      throw InputError("pointed directed: base points must be distinct vertices");
    return k;
  });
}

Json to_json(const EnrichedCategory& c) {
  Json maps = Json::array(), compose = Json::array();
  for (int x = 0; x < c.objects; ++x) {
    Json row = Json::array(), crow = Json::array();
    for (int y = 0; y < c.objects; ++y) {
      row.push_back(to_json(c.map[x][y]));
      Json cell = Json::array();
      for (int z = 0; z < c.objects; ++z) cell.push_back(components_json(c.comp[x][y][z].components()));
      crow.push_back(std::move(cell));
    }
    maps.push_back(std::move(row));
    compose.push_back(std::move(crow));
  }
  return Json{{"objects", c.objects}, {"maps", maps}, {"compose", compose}, {"identities", c.identity}};
}

EnrichedCategory enriched_category_from_json(const Json& j) {
  return guarded("enriched category", [&] {
    if (j.is_object() && j.contains("free_directed")) return free_directed(simplicial_set_from_json(j.at("free_directed")));
    const int objects = field(j, "objects").get<int>();
    if (objects < 1) throw InputError("enriched category: needs at least one object");
    const auto n = static_cast<std::size_t>(objects);
    const auto& maps_j = field(j, "maps");
    const auto& comp_j = field(j, "compose");
    if (maps_j.size() != n || comp_j.size() != n) throw InputError("enriched category: shape mismatch");
    std::vector<std::vector<SimplicialSet>> maps(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (maps_j[x].size() != n) throw InputError("enriched category: shape mismatch");
      for (std::size_t y = 0; y < n; ++y) maps[x].push_back(simplicial_set_from_json(maps_j[x][y]));
    }
    std::vector<std::vector<std::vector<SimplicialMap>>> comp(n, std::vector<std::vector<SimplicialMap>>(n));
    for (std::size_t x = 0; x < n; ++x) {
      if (comp_j[x].size() != n) throw InputError("enriched category: shape mismatch");
      for (std::size_t y = 0; y < n; ++y) {
        if (comp_j[x][y].size() != n) throw InputError("enriched category: shape mismatch");
        for (std::size_t z = 0; z < n; ++z)
          comp[x][y].push_back(SimplicialMap(product(maps[y][z], maps[x][y]), maps[x][z], components_from(comp_j[x][y][z])));
      }
    }
    return make_enriched(objects, std::move(maps), std::move(comp), field(j, "identities").get<std::vector<SimplexId>>());
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(1) << '\n';
}

}  // namespace wurst
