#include "idealforge/serialize.hpp"

#include <stdexcept>

namespace idealforge {

using nlohmann::json;

json element_to_json(const CircleHomeo& g) {
    json breaks = json::array();
    for (const auto& [x, y] : g.breaks()) breaks.push_back(json::array({x.str(), y.str()}));
    return json{{"breaks", breaks}};
}

CircleHomeo element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("breaks") || !j["breaks"].is_array())
        throw std::invalid_argument("element JSON must be an object with a \"breaks\" array");
    BreakList raw;
    for (const auto& pair : j["breaks"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw std::invalid_argument("each break must be a pair of dyadic strings");
        auto x = Dyadic::parse(pair[0].get<std::string>());
        auto y = Dyadic::parse(pair[1].get<std::string>());
        if (!x || !y) throw std::invalid_argument("non-dyadic breakpoint in element JSON");
        raw.emplace_back(*x, *y);
    }
    return CircleHomeo::make(std::move(raw));
}

json marked_point_to_json(const MarkedPoint& p) { return json::array({p.x.str(), p.i, p.j}); }

InclusionInstance instance_from_json(const json& j, const std::string& fallback_name) {
    if (!j.is_object()) throw std::invalid_argument("instance JSON must be an object");
    InclusionInstance inst;
    inst.name = j.value("name", fallback_name);
    auto read_blocks = [&](const char* key) {
        std::vector<std::pair<std::string, int>> out;
        if (!j.contains(key) || !j[key].is_array()) throw std::invalid_argument(std::string(key) + " missing");
        for (const auto& b : j[key]) {
            if (!b.is_array() || b.size() != 2 || !b[0].is_string() || !b[1].is_number_integer())
                throw std::invalid_argument(std::string(key) + " entries must be [label, dim]");
            out.emplace_back(b[0].get<std::string>(), b[1].get<int>());
        }
        return out;
    };
    inst.blocksA = read_blocks("blocksA");
    inst.blocksB = read_blocks("blocksB");
    if (!j.contains("M") || !j["M"].is_array()) throw std::invalid_argument("M missing");
    for (const auto& row : j["M"]) {
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw std::invalid_argument("M entries must be integers");
            r.push_back(v.get<int>());
        }
        inst.M.push_back(std::move(r));
    }
    if (j.contains("action") && !j["action"].is_null()) {
        for (const auto& perm : j["action"]) {
            std::vector<int> p;
            for (const auto& v : perm) {
                if (!v.is_number_integer()) throw std::invalid_argument("action entries must be integers");
                p.push_back(v.get<int>());
            }
            inst.action.push_back(std::move(p));
        }
    }
    return validate_instance(std::move(inst));
}

json instance_to_json(const InclusionInstance& inst) {
    json blocksA = json::array(), blocksB = json::array();
    for (const auto& [lab, d] : inst.blocksA) blocksA.push_back(json::array({lab, d}));
    for (const auto& [lab, d] : inst.blocksB) blocksB.push_back(json::array({lab, d}));
    json out{{"name", inst.name}, {"blocksA", blocksA}, {"blocksB", blocksB}, {"M", inst.M}};
    out["action"] = inst.action.empty() ? json() : json(inst.action);
    return out;
}

std::map<std::string, CircleHomeo> elements_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("element fixture must be a JSON object");
    std::map<std::string, CircleHomeo> out;
    for (const auto& [name, val] : j.items()) out.emplace(name, element_from_json(val));
    return out;
}

json elements_to_json(const std::map<std::string, CircleHomeo>& elems) {
    json out = json::object();
    for (const auto& [name, g] : elems) out[name] = element_to_json(g);
    return out;
}

}  // namespace idealforge
