#pragma once

// Tabular output shared by the CLI subcommands: an ordered list of columns
// plus string-valued rows, rendered as CSV or JSON.

#include <map>
#include <string>
#include <vector>

namespace genusforge {

struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::map<std::string, std::string>> rows;
};

// CSV with a header row, LF line endings, and minimal quoting (fields
// containing commas, quotes, or newlines are quoted with "" escaping).
std::string to_csv(const OutputTable& table);

// {"schema": "genus-forge/1", "rows": [...]} with keys in column order;
// fields absent from a row are omitted from its object.
std::string to_json(const OutputTable& table);

}  // namespace genusforge
