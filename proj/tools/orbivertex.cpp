#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "orbivertex/json_io.hpp"

namespace fs = std::filesystem;
using namespace orbivertex;

namespace {

struct Opts {
	std::string group;
	std::string triangulation = "0";  // index or "all"
	std::string segment;              // "i1,i2"
	long framing = 0;
	long degree = 6;
	std::string out;
	bool regular_only = false;
	std::string signs = "auto";
	std::string framing_a;
	bool dot = false;
};

GroupModel load_group(const Opts& o) {
	long cap = 10000;
	if (const char* env = std::getenv("ORBIVERTEX_MAX_GROUP")) cap = std::atol(env);
	std::vector<Generator> gens;
	if (fs::exists(o.group)) {
		std::ifstream in(o.group);
		Json j;
		in >> j;
		gens = group_from_json(j);
	} else {
		gens = parse_group_label(o.group);
	}
	return build_group(gens, cap);
}

std::vector<std::pair<int, Triangulation>> select_triangulations(const Opts& o,
                                                                const TrianglePoints& t) {
	auto all = enumerate_triangulations(t);
	std::vector<std::pair<int, Triangulation>> out;
	for (size_t i = 0; i < all.size(); ++i) {
		if (o.regular_only && !is_regular(t, all[i])) continue;
		out.push_back({static_cast<int>(i), all[i]});
	}
	if (o.triangulation != "all") {
		int want = std::stoi(o.triangulation);
		std::vector<std::pair<int, Triangulation>> one;
		for (auto& p : out)
			if (p.first == want) one.push_back(p);
		if (one.empty()) throw Error("NotApplicable", "no triangulation with index " + o.triangulation);
		return one;
	}
	return out;
}

std::pair<int, int> pick_segment(const Opts& o, const TrianglePoints& t, const Triangulation& tr) {
	if (o.segment.empty()) return default_brane_segment(t, tr);
	auto comma = o.segment.find(',');
	if (comma == std::string::npos) throw Error("ParseError", "segment must be 'i1,i2'");
	return {std::stoi(o.segment.substr(0, comma)), std::stoi(o.segment.substr(comma + 1))};
}

void emit(const Json& j, const std::string& path) {
	if (path.empty()) {
		std::cout << j.dump(2) << "\n";
	} else {
		if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
		std::ofstream out(path);
		out << j.dump(2) << "\n";
	}
}

Json compare_one(const GroupModel& g, const TrianglePoints& t, const Triangulation& tr,
                 const Opts& o, std::string* status) {
	ChargeSystem cs = brane_extension(g, t, tr, pick_segment(o, t, tr), o.framing);
	Potential w = superpotential(cs, o.degree);
	Rat a = o.framing_a.empty() ? framing_correspondence(g, cs) : parse_rat(o.framing_a);
	TorusWeights tw = torus_weights(g, a);
	Potential forb = orbifold_disc_potential(g, tw, o.degree);
	CorrespondenceReport rep = compare(g, cs, w, forb, o.degree, o.signs == "auto");
	if (status) *status = rep.status;
	return report_to_json(rep);
}

int run(const std::string& cmd, const Opts& o) {
	GroupModel g = load_group(o);
	if (cmd == "group") {
		emit(group_to_json(g), o.out);
		return 0;
	}
	InvariantBasis b = invariant_basis(g);
	TrianglePoints t = triangle_points(g, b);
	if (cmd == "lattice") {
		emit(lattice_to_json(g, b, t), o.out);
		return 0;
	}
	if (cmd == "triangulate") {
		auto sel = select_triangulations(o, t);
		if (!o.out.empty()) {
			fs::create_directories(o.out);
			for (const auto& [i, tr] : sel)
				emit(triangulation_to_json(t, tr, is_regular(t, tr)),
				     (fs::path(o.out) / ("triangulation_" + std::to_string(i) + ".json")).string());
			if (o.dot) {
				std::ofstream dotf(fs::path(o.out) / "flops.dot");
				dotf << flop_graph_dot(flop_graph(enumerate_triangulations(t)));
			}
		} else {
			Json arr = Json::array();
			for (const auto& [i, tr] : sel) arr.push_back(triangulation_to_json(t, tr, is_regular(t, tr)));
			if (o.dot) std::cout << flop_graph_dot(flop_graph(enumerate_triangulations(t)));
			emit(arr, "");
		}
		return 0;
	}
	auto sel = select_triangulations(o, t);
	if (cmd == "charges") {
		Json arr = Json::array();
		for (const auto& [i, tr] : sel) {
			ChargeSystem cs = brane_extension(g, t, tr, pick_segment(o, t, tr), o.framing);
			arr.push_back(charges_to_json(t, cs));
		}
		emit(arr.size() == 1 ? arr[0] : arr, o.out);
		return 0;
	}
	if (cmd == "mirror-map") {
		Json arr = Json::array();
		for (const auto& [i, tr] : sel) {
			ChargeSystem cs = brane_extension(g, t, tr, pick_segment(o, t, tr), o.framing);
			arr.push_back(mirror_map_to_json(mirror_corrections(cs, o.degree)));
		}
		emit(arr.size() == 1 ? arr[0] : arr, o.out);
		return 0;
	}
	if (cmd == "superpotential") {
		Json arr = Json::array();
		for (const auto& [i, tr] : sel) {
			ChargeSystem cs = brane_extension(g, t, tr, pick_segment(o, t, tr), o.framing);
			arr.push_back(potential_to_json(superpotential(cs, o.degree)));
		}
		emit(arr.size() == 1 ? arr[0] : arr, o.out);
		return 0;
	}
	if (cmd == "orbifold-potential") {
		if (o.framing_a.empty()) throw Error("ParseError", "orbifold-potential needs --framing-a");
		TorusWeights tw = torus_weights(g, parse_rat(o.framing_a));
		emit(potential_to_json(orbifold_disc_potential(g, tw, o.degree)), o.out);
		return 0;
	}
	if (cmd == "compare") {
		Json arr = Json::array();
		bool mismatch = false;
		for (const auto& [i, tr] : sel) {
			std::string status;
			arr.push_back(compare_one(g, t, tr, o, &status));
			if (status == "mismatch") mismatch = true;
		}
		emit(arr.size() == 1 ? arr[0] : arr, o.out);
		return mismatch ? 2 : 0;
	}
	if (cmd == "conjecture") {
		Json arr = Json::array();
		for (const auto& [i, tr] : sel) {
			ChargeSystem cs = brane_extension(g, t, tr, pick_segment(o, t, tr), o.framing);
			Json j = conjecture_to_json(conjecture_check(g, cs));
			j["triangulation"] = i;
			arr.push_back(j);
		}
		emit(arr.size() == 1 ? arr[0] : arr, o.out);
		return 0;
	}
	if (cmd == "all") {
		Json rep;
		rep["group"] = group_to_json(g);
		rep["lattice"] = lattice_to_json(g, b, t);
		Json runs = Json::array();
		bool mismatch = false;
		for (const auto& [i, tr] : sel) {
			Json one;
			one["triangulation"] = triangulation_to_json(t, tr, is_regular(t, tr));
			ChargeSystem cs = brane_extension(g, t, tr, pick_segment(o, t, tr), o.framing);
			one["charges"] = charges_to_json(t, cs);
			one["mirror_map"] = mirror_map_to_json(mirror_corrections(cs, o.degree));
			one["superpotential"] = potential_to_json(superpotential(cs, o.degree));
			std::string status;
			one["compare"] = compare_one(g, t, tr, o, &status);
			if (status == "mismatch") mismatch = true;
			if (g.g0_order == 1) one["conjecture"] = conjecture_to_json(conjecture_check(g, cs));
			runs.push_back(one);
		}
		rep["runs"] = runs;
		emit(rep, o.out);
		return mismatch ? 2 : 0;
	}
	throw Error("ParseError", "unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"toric crepant resolutions and disc potentials of C^3 orbifolds"};
	app.require_subcommand(1);
	Opts o;
	std::vector<std::string> names = {"group",        "lattice",           "triangulate",
	                                  "charges",      "mirror-map",        "superpotential",
	                                  "orbifold-potential", "compare",     "conjecture",
	                                  "all"};
	for (const auto& n : names) {
		auto* sub = app.add_subcommand(n);
		sub->add_option("--group", o.group, "group spec file or label like Z3(1,1,1)")->required();
		sub->add_option("--triangulation", o.triangulation, "triangulation index or 'all'");
		sub->add_option("--segment", o.segment, "brane segment 'i1,i2'");
		sub->add_option("--framing", o.framing, "integer framing f");
		sub->add_option("--degree", o.degree, "truncation degree D");
		sub->add_option("--out", o.out, "output file or directory");
		sub->add_flag("--regular-only", o.regular_only, "keep regular triangulations only");
		sub->add_option("--signs", o.signs, "sign search mode: auto|none");
		sub->add_option("--framing-a", o.framing_a, "rational framing a override");
		sub->add_flag("--dot", o.dot, "emit DOT flop graph");
	}
	CLI11_PARSE(app, argc, argv);
	try {
		return run(app.get_subcommands()[0]->get_name(), o);
	} catch (const Error& e) {
		Json err;
		err["error"] = e.kind;
		err["message"] = e.what();
		std::cerr << err.dump(2) << "\n";
		return 1;
	} catch (const std::exception& e) {
		Json err;
		err["error"] = "Internal";
		err["message"] = e.what();
		std::cerr << err.dump(2) << "\n";
		return 1;
	}
}
