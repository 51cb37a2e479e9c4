#pragma once

#include <string>

#include <json.hpp>

namespace mf {

// Machine-readable result of one verification.  Schema:
//   {"check": name, "weight": k, "pass": bool, "details": {...}}
// weight 0 marks weight-independent checks.
struct CheckReport {
    std::string check;
    long weight = 0;
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const {
        return nlohmann::json{{"check", check}, {"weight", weight}, {"pass", pass}, {"details", details}};
    }
};

}  // namespace mf
