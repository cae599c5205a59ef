#pragma once

#include <string>

#include <json.hpp>

#include "houghton/cubing.hpp"
#include "houghton/element.hpp"
#include "houghton/link_complex.hpp"
#include "houghton/presentation.hpp"

namespace houghton {

// {"n": n, "shifts": [...], "exceptions": [[ray, pos, ray', pos'], ...]}; exceptions
// sorted by source, pure-shift entries omitted. Parsing validates.
nlohmann::json to_json(Element const& e);
Element element_from_json(nlohmann::json const& j);

nlohmann::json to_json(Point p);
Point point_from_json(nlohmann::json const& j);

nlohmann::json to_json(Presentation const& p);
nlohmann::json to_json(SymmetricReport const& r);
nlohmann::json to_json(HomologyProfile const& h);

// {"n", "h", "vertices": [[x,y], ...], "simplices": [[ids], ...] by dimension,
// "euler", "b0", "b1m2"}.
nlohmann::json link_to_json(int n, int h, SimplicialComplex const& c);

// Undirected Graphviz graph; vertices labelled by height and shifts, edges by t_i.
std::string ball_to_dot(Ball const& ball);

}  // namespace houghton
