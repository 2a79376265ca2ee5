#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fk/subgraph.hpp"

namespace fk {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " at line " + std::to_string(line) +
                             ", column " + std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Text format: one character per lattice cell, '#' member, '.' absent.
// Row 0 of the text is the top row (largest y). A parsed shape is anchored
// with xmin = ymin = 0, so parse(emit(g)) == g for shapes already anchored
// at the origin. Lines may have unequal lengths; short lines pad with '.'.
inline Subgraph parse_text(std::string_view text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) rows.push_back(cur);

    std::vector<Cell> cells;
    for (int r = 0; r < int(rows.size()); ++r) {
        std::string& row = rows[std::size_t(r)];
        if (!row.empty() && row.back() == '\r') row.pop_back();
        for (int c = 0; c < int(row.size()); ++c) {
            char ch = row[std::size_t(c)];
            if (ch == '#')
                cells.push_back(Cell{c, int(rows.size()) - 1 - r});
            else if (ch != '.')
                throw ParseError(std::string("unexpected character '") + ch + "'",
                                 r + 1, c + 1);
        }
    }
    if (cells.empty()) throw ParseError("empty shape", 1, 1);
    // anchor at the origin (rows may all start with '.')
    Subgraph g((std::move(cells)));
    return translated(g, -g.bbox().xmin, -g.bbox().ymin);
}

inline std::string emit_text(const Subgraph& g) {
    const BoundingBox& bb = g.bbox();
    std::string out;
    out.reserve(std::size_t(bb.width() + 1) * std::size_t(bb.height()));
    for (int y = bb.ymax; y >= bb.ymin; --y) {
        for (int x = bb.xmin; x <= bb.xmax; ++x)
            out.push_back(g.contains(Cell{x, y}) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

// JSON format: {"cells": [[x, y], ...]} with cells sorted by (y, x).
inline nlohmann::json shape_to_json(const Subgraph& g) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell& c : g.cells()) cells.push_back({c.x, c.y});
    return nlohmann::json{{"cells", std::move(cells)}};
}

inline std::string emit_json(const Subgraph& g) { return shape_to_json(g).dump(); }

inline Subgraph shape_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw ParseError("expected an object with a \"cells\" array", 1, 1);
    std::vector<Cell> cells;
    for (const auto& e : j["cells"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("cell entries must be [x, y] integer pairs", 1, 1);
        cells.push_back(Cell{e[0].get<int>(), e[1].get<int>()});
    }
    if (cells.empty()) throw ParseError("empty shape", 1, 1);
    return Subgraph(std::move(cells));
}

inline Subgraph parse_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON", 1, 1);
    return shape_from_json(j);
}

// Sniffs the format: JSON if the first non-space byte is '{', text otherwise.
inline Subgraph parse_shape(std::string_view text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        return ch == '{' ? parse_json(text) : parse_text(text);
    }
    throw ParseError("empty shape", 1, 1);
}

}  // namespace fk
