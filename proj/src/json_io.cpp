#include "mf/json_io.hpp"

#include "mf/errors.hpp"

namespace mf {

nlohmann::json qexpansion_to_json(const QExpansion& f) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [m, v] : f.coeffs()) coeffs[std::to_string(m)] = rational_to_string(v);
    return nlohmann::json{{"grid", f.grid() == Grid::Integer ? "int" : "half"},
                          {"precision", f.precision()},
                          {"coeffs", coeffs}};
}

QExpansion qexpansion_from_json(const nlohmann::json& j) {
    std::string grid_text = j.at("grid").get<std::string>();
    Grid grid;
    if (grid_text == "int")
        grid = Grid::Integer;
    else if (grid_text == "half")
        grid = Grid::Half;
    else
        throw ParseError("qexpansion: unknown grid '" + grid_text + "'");
    long precision = j.at("precision").get<long>();
    std::map<long, Rational> coeffs;
    for (const auto& [key, value] : j.at("coeffs").items())
        coeffs[std::stol(key)] = rational_from_string(value.get<std::string>());
    return QExpansion(grid, precision, std::move(coeffs));
}

nlohmann::json formspace_to_json(const FormSpace& s) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& f : s.basis) basis.push_back(qexpansion_to_json(f));
    return nlohmann::json{{"group", group_to_string(s.group)},
                          {"weight", s.weight},
                          {"character", character_to_string(s.character)},
                          {"sturm", s.sturm},
                          {"basis", basis}};
}

FormSpace formspace_from_json(const nlohmann::json& j) {
    FormSpace s;
    s.group = group_from_string(j.at("group").get<std::string>());
    s.weight = j.at("weight").get<long>();
    s.character = character_from_string(j.at("character").get<std::string>());
    s.sturm = j.at("sturm").get<long>();
    for (const auto& item : j.at("basis")) s.basis.push_back(qexpansion_from_json(item));
    return s;
}

}  // namespace mf
