#include "g2char/document.hpp"

#include <cstdio>

namespace g2char {

using nlohmann::ordered_json;

ordered_json character_document(const VirtualCharacter& vc, const std::string& command) {
    ordered_json doc;
    doc["basis"] = to_string(vc.basis());
    if (vc.window())
        doc["window"] = *vc.window();
    else
        doc["window"] = nullptr;
    ordered_json terms = ordered_json::array();
    for (const auto& [key, coeff] : vc.terms()) {
        ordered_json t;
        t["a"] = key.a;
        t["b"] = key.b;
        t["coeff"] = coeff;
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    doc["meta"] = {{"command", command}, {"version", kVersion}};
    return doc;
}

std::string character_csv(const VirtualCharacter& vc) {
    std::string out = "a,b,coeff\n";
    for (const auto& [key, coeff] : vc.terms())
        out += std::to_string(key.a) + "," + std::to_string(key.b) + "," +
               std::to_string(coeff) + "\n";
    return out;
}

ordered_json weight_system_document(const RootSystem& rs, const WeightSystem& ws,
                                    const std::string& command) {
    ordered_json doc;
    doc["lambda"] = {{"a", ws.highest_weight().a}, {"b", ws.highest_weight().b}};
    doc["dim"] = weyl_dim(rs, ws.highest_weight());
    ordered_json rows = ordered_json::array();
    for (const auto& [mu, mult] : ws.table()) {
        ordered_json t;
        t["a"] = mu.a;
        t["b"] = mu.b;
        t["mult"] = mult;
        rows.push_back(std::move(t));
    }
    doc["weights"] = std::move(rows);
    doc["meta"] = {{"command", command}, {"version", kVersion}};
    return doc;
}

std::string weight_system_csv(const WeightSystem& ws) {
    std::string out = "a,b,mult\n";
    for (const auto& [mu, mult] : ws.table())
        out += std::to_string(mu.a) + "," + std::to_string(mu.b) + "," +
               std::to_string(mult) + "\n";
    return out;
}

ordered_json report_document(const VerificationReport& r) {
    ordered_json doc;
    doc["name"] = r.name;
    doc["status"] = r.passed ? "pass" : "fail";
    ordered_json params;
    for (const auto& [k, v] : r.params)
        params[k] = v;
    doc["params"] = std::move(params);
    if (r.witness) {
        doc["witness"] = {{"a", r.witness->key.a},
                          {"b", r.witness->key.b},
                          {"expected", r.witness->expected},
                          {"actual", r.witness->actual}};
    } else {
        doc["witness"] = nullptr;
    }
    doc["notes"] = r.notes;
    doc["wall_ms"] = r.wall_ms;
    return doc;
}

std::string report_text(const VerificationReport& r) {
    std::string line = r.passed ? "PASS  " : "FAIL  ";
    line += r.name;
    for (const auto& [k, v] : r.params)
        line += "  " + k + "=" + std::to_string(v);
    if (r.witness)
        line += "  witness (" + std::to_string(r.witness->key.a) + "," +
                std::to_string(r.witness->key.b) + "): expected " +
                std::to_string(r.witness->expected) + ", actual " +
                std::to_string(r.witness->actual);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "  [%.1f ms]", r.wall_ms);
    line += buf;
    for (const std::string& note : r.notes)
        line += "\n    - " + note;
    return line;
}

}  // namespace g2char
