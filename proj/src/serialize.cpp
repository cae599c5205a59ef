#include "houghton/serialize.hpp"

#include <sstream>

#include "houghton/errors.hpp"

namespace houghton {

using nlohmann::json;

json to_json(Point p) { return json::array({p.ray, p.pos}); }

Point point_from_json(json const& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("a point is a pair [ray, pos], got " + j.dump());
  Point const p{j[0].get<int>(), j[1].get<int>()};
  if (p.ray < 1 || p.pos < 1) throw ParseError("ray and pos must be >= 1, got " + j.dump());
  return p;
}

json to_json(Element const& e) {
  json ex = json::array();
  for (auto const& [from, to] : e.exceptions()) ex.push_back(json::array({from.ray, from.pos, to.ray, to.pos}));
  std::vector<int> shifts(e.shifts().begin(), e.shifts().end());
  return {{"n", e.rays()}, {"shifts", shifts}, {"exceptions", ex}};
}

Element element_from_json(json const& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("shifts"))
    throw ParseError("an element needs \"n\" and \"shifts\"");
  try {
    int const n = j.at("n").get<int>();
    auto shifts = j.at("shifts").get<std::vector<int>>();
    if (static_cast<int>(shifts.size()) != n) throw MalformedElement("shift vector length differs from n");
    Element::ExceptionTable table;
    if (j.contains("exceptions"))
      for (auto const& row : j.at("exceptions")) {
        if (!row.is_array() || row.size() != 4) throw ParseError("an exception is [ray, pos, ray', pos'], got " + row.dump());
        auto const v = row.get<std::vector<int>>();
        table.emplace_back(Point{v[0], v[1]}, Point{v[2], v[3]});
      }
    return Element(n, std::move(shifts), table);
  } catch (json::exception const& e) {
    throw ParseError(std::string("malformed element JSON: ") + e.what());
  }
}

json to_json(Presentation const& p) {
  json rels = json::array();
  json families = json::array();
  for (auto const& r : p.relators) {
    rels.push_back(p.tokens(r));
    families.push_back(r.family);
  }
  json real = json::object();
  for (std::size_t i = 0; i < p.generators.size() && i < p.realization.size(); ++i)
    real[p.generators[i]] = to_json(p.realization[i]);
  return {{"generators", p.generators}, {"relators", rels}, {"families", families}, {"realization", real}};
}

json to_json(SymmetricReport const& r) {
  return {{"n", r.n},
          {"r", r.r},
          {"order", r.order},
          {"expected_order", r.expected_order},
          {"relators", r.relators},
          {"failing", r.failing},
          {"ok", r.ok()}};
}

json to_json(HomologyProfile const& h) { return {{"euler", h.euler}, {"b0", h.b0}, {"b1m2", h.b1_mod2}}; }

json link_to_json(int n, int h, SimplicialComplex const& c) {
  json verts = json::array();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= h; ++y) verts.push_back(json::array({x, y}));
  json simplices = json::array();
  for (int d = 0; d <= c.max_dim(); ++d) {
    json layer = json::array();
    for (auto const& s : c.simplices(d)) layer.push_back(s);
    simplices.push_back(layer);
  }
  HomologyProfile const prof = homology_profile(c);
  return {{"n", n},        {"h", h},          {"vertices", verts}, {"simplices", simplices},
          {"euler", prof.euler}, {"b0", prof.b0}, {"b1m2", prof.b1_mod2}};
}

std::string ball_to_dot(Ball const& ball) {
  std::ostringstream os;
  os << "graph ball {\n";
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    Element const& e = ball.vertices[v];
    os << "  v" << v << " [label=\"h=" << e.height() << " m=(";
    for (int k = 1; k <= e.rays(); ++k) os << (k > 1 ? "," : "") << e.shift(k);
    os << ")\"];\n";
  }
  for (auto const& edge : ball.edges) os << "  v" << edge.from << " -- v" << edge.to << " [label=\"t" << edge.gen << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace houghton
