#pragma once

#include <json.hpp>

#include "orbivertex/correspondence.hpp"

namespace orbivertex {

using Json = nlohmann::json;

// accepts {"generators":[{"order":n,"weights":[a,b,c]},...]} or {"label":"Zn(a,b,c)"}
std::vector<Generator> group_from_json(const Json& j);

Json group_to_json(const GroupModel& g);
Json lattice_to_json(const GroupModel& g, const InvariantBasis& b, const TrianglePoints& t);
Json triangulation_to_json(const TrianglePoints& t, const Triangulation& tr, bool regular);
Json charges_to_json(const TrianglePoints& t, const ChargeSystem& cs);

Json series_to_json(const QSeries& s);
QSeries series_from_json(const Json& j);

Json mirror_map_to_json(const MirrorMap& mm);
Json potential_to_json(const Potential& p);
Json report_to_json(const CorrespondenceReport& r);
Json conjecture_to_json(const ConjectureReport& r);

std::string flop_graph_dot(const FlopGraph& fg);

}  // namespace orbivertex
