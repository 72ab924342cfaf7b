#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cde/errors.hpp"
#include "cde/poset.hpp"

namespace cde {

using nlohmann::json;

Poset poset_from_json_text(const std::string& text) {
	json j;
	try {
		j = json::parse(text);
	} catch(const json::exception& e) {
		throw InputError(std::string("poset JSON: ") + e.what());
	}
	if(!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
		throw InputError("poset JSON needs an integer field \"n\"");
	}
	int n = j["n"].get<int>();
	std::vector<Relation> rel;
	if(j.contains("relations")) {
		for(const auto& r : j["relations"]) {
			if(!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer()) {
				throw InputError("poset JSON: each relation must be a pair of integers");
			}
			rel.emplace_back(r[0].get<int>(), r[1].get<int>());
		}
	}
	std::vector<std::string> labels;
	if(j.contains("labels")) {
		for(const auto& l : j["labels"]) {
			labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
		}
	}
	return Poset::from_relations(n, rel, labels);
}

Poset load_poset(const std::string& path) {
	std::ifstream in(path);
	if(!in) {
		throw InputError("cannot open poset file '" + path + "'");
	}
	std::stringstream ss;
	ss << in.rdbuf();
	return poset_from_json_text(ss.str());
}

std::string poset_to_json_text(const Poset& P) {
	json j;
	j["n"] = P.size();
	json rel = json::array();
	for(auto [p, q] : P.covers()) {
		rel.push_back({p, q});
	}
	j["relations"] = rel;
	if(!P.labels().empty()) {
		j["labels"] = P.labels();
	}
	return j.dump();
}

}  // namespace cde
