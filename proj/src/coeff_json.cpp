#include "aromatic/coeff_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace aromatic {

std::string to_json(const CoeffMap& map)
{
    // ordered_json keeps the metadata first and forests in canonical order.
    nlohmann::ordered_json j;
    j["__order"] = map.order();
    j["__domain"] = std::string(to_string(map.domain()));
    for (const auto& [forest, value] : map.entries()) j[forest.text()] = format_rational(value);
    return j.dump(2);
}

CoeffMap coeff_map_from_json(std::string_view json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("coefficient map is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("coefficient map must be a JSON object");
    if (!j.contains("__order") || !j["__order"].is_number_unsigned())
        throw std::invalid_argument("coefficient map needs a non-negative integer \"__order\"");
    if (!j.contains("__domain") || !j["__domain"].is_string())
        throw std::invalid_argument("coefficient map needs a \"__domain\" string");

    CoeffMap map(parse_domain(j["__domain"].get<std::string>()), j["__order"].get<std::size_t>());
    for (const auto& [key, value] : j.items()) {
        if (key == "__order" || key == "__domain") continue;
        if (!value.is_string()) throw std::invalid_argument("coefficient of '" + key + "' must be a \"p/q\" string");
        const auto forest = parse(key);
        if (map(forest) != 0) throw std::invalid_argument("forest '" + key + "' listed twice after canonicalization");
        map.set(forest, parse_rational(value.get<std::string>()));
    }
    return map;
}

CoeffMap read_coeff_map(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return coeff_map_from_json(ss.str());
}

void write_coeff_map(const std::string& path, const CoeffMap& map)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << to_json(map) << '\n';
}

}  // namespace aromatic
