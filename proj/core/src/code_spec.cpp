#include "dnacode/code_spec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dnacode/errors.hpp"

namespace dnacode {

namespace {

std::size_t read_length(const nlohmann::json& doc, const char* field) {
    const auto& v = doc.at(field);
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw ParseError(std::string("code spec: \"") + field + "\" must be an integer");
    }
    const auto value = v.get<long long>();
    if (value < 0) throw ParseError(std::string("code spec: \"") + field + "\" must be non-negative");
    return static_cast<std::size_t>(value);
}

}  // namespace

DnaLinearCode parse_code_spec(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text.begin(), json_text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("code spec: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("code spec: top level must be an object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "n" && key != "k" && key != "p_rows") {
            throw ParseError("code spec: unexpected field \"" + key + "\"");
        }
    }
    for (const char* field : {"n", "k", "p_rows"}) {
        if (!doc.contains(field)) throw ParseError(std::string("code spec: missing field \"") + field + "\"");
    }
    const std::size_t n = read_length(doc, "n");
    const std::size_t k = read_length(doc, "k");
    const auto& rows_json = doc.at("p_rows");
    if (!rows_json.is_array()) throw ParseError("code spec: \"p_rows\" must be an array of strings");

    std::vector<std::string> rows;
    for (const auto& r : rows_json) {
        if (!r.is_string()) throw ParseError("code spec: \"p_rows\" must be an array of strings");
        rows.push_back(r.get<std::string>());
    }
    if (rows.size() != k) {
        throw ConstructionError("code spec: p_rows has " + std::to_string(rows.size()) +
                                " rows, expected k = " + std::to_string(k));
    }
    const std::size_t width = n > k ? n - k : 0;
    return DnaLinearCode(n, k, BitMatrix::from_rows(std::span<const std::string>(rows), width));
}

DnaLinearCode load_code_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code spec '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_spec(buf.str());
}

std::string to_code_spec_json(const DnaLinearCode& code) {
    nlohmann::ordered_json doc;
    doc["n"] = code.n();
    doc["k"] = code.k();
    doc["p_rows"] = code.parity().row_strings();
    return doc.dump();
}

}  // namespace dnacode
