#include "genusforge/records.hpp"

#include <json.hpp>

namespace genusforge {

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string to_csv(const OutputTable& table) {
    std::string out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ",";
        out += csv_field(table.columns[i]);
    }
    out += "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < table.columns.size(); ++i) {
            if (i) out += ",";
            auto it = row.find(table.columns[i]);
            if (it != row.end()) out += csv_field(it->second);
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const OutputTable& table) {
    nlohmann::ordered_json doc;
    doc["schema"] = "genus-forge/1";
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const std::string& col : table.columns) {
            auto it = row.find(col);
            if (it != row.end()) obj[col] = it->second;
        }
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

}  // namespace genusforge
