#include "orbivertex/json_io.hpp"

namespace orbivertex {

namespace {

Json rvec_json(const RVec& v) {
	Json a = Json::array();
	for (const Rat& x : v) a.push_back(rat_str(x));
	return a;
}

Json ivec_json(const IVec& v) {
	Json a = Json::array();
	for (const Int& x : v) a.push_back(x.get_str());
	return a;
}

}  // namespace

std::vector<Generator> group_from_json(const Json& j) {
	if (j.contains("label")) return parse_group_label(j.at("label").get<std::string>());
	std::vector<Generator> gens;
	for (const auto& e : j.at("generators")) {
		Generator g;
		g.order = e.at("order").get<long>();
		auto w = e.at("weights");
		if (w.size() != 3) throw Error("ParseError", "weights must have three entries");
		for (int k = 0; k < 3; ++k) g.weights[k] = w[k].get<long>();
		gens.push_back(g);
	}
	return gens;
}

Json group_to_json(const GroupModel& g) {
	Json j;
	j["order"] = g.size();
	j["isotropy_orders"] = {g.g0_order, g.g1_order, g.g2_order};
	j["alpha"] = g.alpha;
	j["beta"] = g.beta;
	j["abc"] = {g.a, g.b, g.c};
	j["coord_rotation"] = g.coord_rotation;
	Json els = Json::array();
	for (const auto& e : g.elements) {
		Json el;
		el["id"] = e.index;
		el["order"] = e.order;
		el["shifts"] = {rat_str(e.shifts[0]), rat_str(e.shifts[1]), rat_str(e.shifts[2])};
		el["age"] = age(e);
		els.push_back(el);
	}
	j["elements"] = els;
	j["small"] = g.small;
	return j;
}

Json lattice_to_json(const GroupModel& g, const InvariantBasis& b, const TrianglePoints& t) {
	Json j;
	Json eps = Json::array();
	for (const auto& col : b.epsilon) eps.push_back({col[0].get_str(), col[1].get_str(), col[2].get_str()});
	j["epsilon"] = eps;
	j["m1_star"] = b.m1_star.get_str();
	j["m2_star"] = b.m2_star.get_str();
	j["det"] = b.det.get_str();
	Json pts = Json::array();
	for (int p = 0; p < t.point_count(); ++p) {
		Json pt;
		pt["index"] = p;
		pt["element"] = t.element_of(p);
		auto w = t.vtilde(p);
		pt["vtilde"] = {w[0].get_str(), w[1].get_str(), w[2].get_str()};
		pts.push_back(pt);
	}
	j["points"] = pts;
	PickAudit pa = pick_audit(g, t);
	j["pick"] = {{"interior", pa.interior}, {"boundary", pa.boundary}, {"area", rat_str(pa.area)}};
	return j;
}

Json triangulation_to_json(const TrianglePoints& t, const Triangulation& tr, bool regular) {
	Json j;
	j["id"] = tr.id;
	Json tris = Json::array();
	for (const auto& tri : tr.triangles) tris.push_back({tri[0], tri[1], tri[2]});
	j["triangles"] = tris;
	Json ie = Json::array();
	for (const auto& [a, b] : tr.interior_edges()) ie.push_back({a, b});
	j["interior_edges"] = ie;
	j["regular"] = regular;
	Json segs = Json::array();
	for (const auto& [a, b] : v1v2_segments(t, tr)) segs.push_back({a, b});
	j["v1v2_segments"] = segs;
	return j;
}

Json charges_to_json(const TrianglePoints& t, const ChargeSystem& cs) {
	Json j;
	j["triangulation"] = cs.triangulation_id;
	Json rows = Json::array();
	for (int i = 0; i < cs.s(); ++i) {
		Json r;
		r["element"] = cs.small[i];
		r["curve"] = {cs.chosen_curves[i].first, cs.chosen_curves[i].second};
		r["l"] = ivec_json(cs.charges[i]);
		rows.push_back(r);
	}
	j["charges"] = rows;
	j["l0"] = ivec_json(cs.l0);
	j["brane"] = {{"i0", cs.i0}, {"i1", cs.i1}, {"i2", cs.i2}, {"f", cs.f}};
	(void)t;
	return j;
}

Json series_to_json(const QSeries& s) {
	Json j;
	j["vars"] = s.vars();
	j["trunc"] = rat_str(s.truncation());
	Json terms = Json::array();
	for (const auto& [e, c] : s.terms()) {
		Json t;
		t["exp"] = rvec_json(e);
		t["coef"] = rat_str(c.value);
		t["phase"] = rat_str(c.phase);
		if (c.l2 != 0) t["phase_l2"] = c.l2;
		terms.push_back(t);
	}
	j["terms"] = terms;
	return j;
}

QSeries series_from_json(const Json& j) {
	std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
	QSeries s(vars, parse_rat(j.at("trunc").get<std::string>()));
	for (const auto& t : j.at("terms")) {
		RVec e;
		for (const auto& x : t.at("exp")) e.push_back(parse_rat(x.get<std::string>()));
		Coef c(parse_rat(t.at("coef").get<std::string>()),
		       parse_rat(t.at("phase").get<std::string>()),
		       t.contains("phase_l2") ? t.at("phase_l2").get<int>() : 0);
		s.add_term(std::move(e), c);
	}
	return s;
}

Json mirror_map_to_json(const MirrorMap& mm) {
	Json j;
	Json cs = Json::array();
	for (size_t i = 0; i < mm.corrections.size(); ++i) {
		Json c;
		c["var"] = mm.qvars[i];
		c["series"] = series_to_json(mm.corrections[i]);
		cs.push_back(c);
	}
	j["corrections"] = cs;
	j["c0"] = series_to_json(mm.c0);
	return j;
}

Json potential_to_json(const Potential& p) {
	Json j;
	j["side"] = p.side;
	j["f"] = p.f;
	j["a"] = rat_str(p.a);
	j["series"] = series_to_json(p.series);
	return j;
}

Json report_to_json(const CorrespondenceReport& r) {
	Json j;
	j["f"] = r.f;
	j["a"] = rat_str(r.a);
	Json b = Json::array();
	for (const auto& row : r.b) b.push_back(rvec_json(row));
	j["b"] = b;
	j["case"] = r.case_tag;
	j["status"] = r.status;
	j["matched_terms"] = r.matched_terms;
	Json mm = Json::array();
	for (const auto& m : r.mismatches)
		mm.push_back({{"exp", rvec_json(m.exps)}, {"left", rat_str(m.left)}, {"right", rat_str(m.right)}});
	j["mismatches"] = mm;
	Json dr = Json::array();
	for (const auto& [k, d] : r.dropped) dr.push_back({{"k", k}, {"d", d}});
	j["dropped"] = dr;
	if (!r.sign_twist.empty()) j["sign_twist"] = r.sign_twist;
	return j;
}

Json conjecture_to_json(const ConjectureReport& r) {
	Json j;
	j["order"] = r.order;
	Json m = Json::array(), inv = Json::array();
	for (const auto& row : r.matrix) m.push_back(rvec_json(row));
	for (const auto& row : r.inverse) inv.push_back(rvec_json(row));
	j["matrix"] = m;
	j["inverse"] = inv;
	j["integral"] = r.integral;
	j["nonnegative"] = r.nonnegative;
	return j;
}

std::string flop_graph_dot(const FlopGraph& fg) {
	std::string s = "graph flops {\n";
	for (size_t i = 0; i < fg.nodes.size(); ++i)
		s += "  n" + std::to_string(i) + " [label=\"" + std::to_string(i) + "\"];\n";
	for (const auto& [a, b] : fg.arcs)
		s += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
	s += "}\n";
	return s;
}

}  // namespace orbivertex
