#include "eschur/io.hpp"

#include "eschur/errors.hpp"

namespace eschur {

json to_json(const Partition &p) {
  return {{"parts", p.parts()}, {"extent", p.extent()}};
}

Partition partition_from_json(const json &j) {
  try {
    if (j.is_array()) return Partition(j.get<std::vector<int>>());
    auto parts = j.at("parts").get<std::vector<int>>();
    int extent = j.contains("extent") ? j.at("extent").get<int>()
                                      : static_cast<int>(parts.size());
    return Partition(parts, extent);
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad partition JSON: ") + e.what());
  }
}

json to_json(const SkewShape &s) {
  return {{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}};
}

SkewShape skew_from_json(const json &j) {
  try {
    if (!j.is_object() || !j.contains("outer"))
      return SkewShape(partition_from_json(j));
    Partition outer = partition_from_json(j.at("outer"));
    if (!j.contains("inner")) return SkewShape(outer);
    return SkewShape(outer, partition_from_json(j.at("inner")));
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad shape JSON: ") + e.what());
  }
}

json to_json(const EdgeTableau &t) {
  json entries = json::array(), edges = json::array();
  for (const auto &c : t.shape().cells())
    entries.push_back({c.i, c.j, t.entry(c.i, c.j)});
  for (const auto &[e, set] : t.edges) edges.push_back({e.i, e.j, set});
  return {{"shape", to_json(t.shape())},
          {"extent", t.shape().extent()},
          {"window", {t.lo, t.hi}},
          {"entries", entries},
          {"edges", edges}};
}

json to_json(const Tableau &t) { return to_json(EdgeTableau{t, 0, -1, {}}); }

EdgeTableau elt_from_json(const json &j) {
  try {
    SkewShape shape = skew_from_json(j.at("shape"));
    if (j.contains("extent")) {
      int ext = j.at("extent").get<int>();
      shape = SkewShape(shape.outer().with_extent(ext),
                        shape.inner().with_extent(ext));
    }
    Tableau boxes(shape);
    for (const auto &e : j.at("entries")) {
      int i = e.at(0).get<int>(), c = e.at(1).get<int>(), v = e.at(2).get<int>();
      if (!shape.contains(i, c))
        throw ParseError("entry at (" + std::to_string(i) + "," +
                         std::to_string(c) + ") outside the shape");
      boxes.set(i, c, v);
    }
    EdgeTableau t{boxes, 0, -1, {}};
    if (j.contains("window")) {
      t.lo = j.at("window").at(0).get<int>();
      t.hi = j.at("window").at(1).get<int>();
    }
    if (j.contains("edges"))
      for (const auto &e : j.at("edges")) {
        auto set = e.at(2).get<std::vector<int>>();
        if (set.empty()) continue;
        std::sort(set.begin(), set.end());
        t.edges[{e.at(0).get<int>(), e.at(1).get<int>()}] = set;
      }
    return t;
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad tableau JSON: ") + e.what());
  }
}

} // namespace eschur
