#include "subtile/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace subtile {
namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw std::invalid_argument("schema: " + what);
}

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) schema_error(std::string(key) + " must be an integer");
    return j[key].get<int>();
}

}  // namespace

Json to_json(const Polyomino& p) {
    if (p.is_rectangle()) return Json{{"rect", {p.height(), p.width()}}};
    Json cells = Json::array();
    for (Cell c : p.cells()) cells.push_back({c.x, c.y});
    return cells;
}

Polyomino polyomino_from_json(const Json& j) {
    if (j.is_object()) {
        if (!j.contains("rect") || !j["rect"].is_array() || j["rect"].size() != 2)
            schema_error("polyomino object must be {\"rect\": [h, w]}");
        return Polyomino::rect(j["rect"][0].get<int>(), j["rect"][1].get<int>());
    }
    if (!j.is_array() || j.empty()) schema_error("polyomino must be a non-empty cell array or a rect object");
    std::vector<Cell> cells;
    for (const Json& c : j) {
        if (!c.is_array() || c.size() != 2) schema_error("cell must be [x, y]");
        cells.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return Polyomino(std::move(cells));
}

std::string to_string(TransformMode mode) {
    switch (mode) {
        case TransformMode::fixed: return "fixed";
        case TransformMode::vertical_reflections: return "vertical-reflections";
        case TransformMode::rotations_and_reflections: return "rotations-and-reflections";
    }
    throw std::invalid_argument("unknown transform mode");
}

TransformMode transform_mode_from_string(const std::string& s) {
    std::string k = s;
    std::replace(k.begin(), k.end(), '_', '-');
    if (k == "fixed") return TransformMode::fixed;
    if (k == "vertical-reflections") return TransformMode::vertical_reflections;
    if (k == "rotations-and-reflections") return TransformMode::rotations_and_reflections;
    schema_error("unknown mode '" + s + "'");
}

Json to_json(const Library& lib) {
    Json pieces = Json::array();
    for (const Polyomino& p : lib.pieces) pieces.push_back(to_json(p));
    return Json{{"mode", to_string(lib.mode)}, {"pieces", pieces}};
}

Library library_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
        schema_error("library must be {\"mode\": ..., \"pieces\": [...]}");
    TransformMode mode = TransformMode::fixed;
    if (j.contains("mode")) mode = transform_mode_from_string(j["mode"].get<std::string>());
    std::vector<Polyomino> pieces;
    for (const Json& p : j["pieces"]) pieces.push_back(polyomino_from_json(p));
    return make_library(std::move(pieces), mode);
}

Json to_json(const Tiling& t) {
    Json placements = Json::array();
    for (const Placement& pl : t.placements)
        placements.push_back({{"piece", pl.piece}, {"transform", pl.transform}, {"at", {pl.at.x, pl.at.y}}});
    return Json{{"n", t.n}, {"m", t.m}, {"placements", placements}};
}

Tiling tiling_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("placements") || !j["placements"].is_array())
        schema_error("tiling must be {\"n\": _, \"m\": _, \"placements\": [...]}");
    Tiling t;
    t.n = int_field(j, "n");
    t.m = int_field(j, "m");
    for (const Json& p : j["placements"]) {
        Placement pl;
        pl.piece = int_field(p, "piece");
        pl.transform = p.contains("transform") ? p["transform"].get<int>() : 0;
        if (!p.contains("at") || !p["at"].is_array() || p["at"].size() != 2) schema_error("placement needs \"at\": [x, y]");
        pl.at = {p["at"][0].get<int>(), p["at"][1].get<int>()};
        t.placements.push_back(pl);
    }
    return t;
}

Json to_json(const PieceMultiset& ms) {
    Json out = Json::array();
    for (const auto& [shape, k] : ms.counts) out.push_back({{"shape", to_json(shape)}, {"count", k}});
    return out;
}

PieceMultiset multiset_from_json(const Json& j, const Library* lib) {
    if (!j.is_array()) schema_error("multiset must be an array of {shape|piece, count} entries");
    PieceMultiset ms;
    for (const Json& e : j) {
        long long count = 1;
        if (e.contains("count")) count = e["count"].get<long long>();
        if (count < 0) schema_error("multiset count must be >= 0");
        if (e.contains("shape")) {
            ms.add(polyomino_from_json(e["shape"]), count);
        } else if (e.contains("piece")) {
            if (!lib) schema_error("multiset entry references a piece index but no library is in scope");
            int idx = e["piece"].get<int>();
            if (idx < 0 || idx >= static_cast<int>(lib->pieces.size())) schema_error("piece index out of range");
            ms.add(lib->pieces[static_cast<size_t>(idx)], count);
        } else {
            schema_error("multiset entry needs \"shape\" or \"piece\"");
        }
    }
    return ms;
}

Json to_json(const RowAssignedPiece& p) {
    return Json{{"rect", {p.height, p.width}}, {"rows", {p.rows.start, p.rows.len}}};
}

RowAssignedPiece row_assigned_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rect") || !j.contains("rows")) schema_error("expected {\"rect\": [a, b], \"rows\": [l, len]}");
    if (!j["rect"].is_array() || j["rect"].size() != 2 || !j["rows"].is_array() || j["rows"].size() != 2)
        schema_error("rect and rows must be pairs");
    RowAssignedPiece p;
    p.height = j["rect"][0].get<int>();
    p.width = j["rect"][1].get<int>();
    p.rows = {j["rows"][0].get<int>(), j["rows"][1].get<int>()};
    return p;
}

Json to_json(const RowAssignment& pieces) {
    Json out = Json::array();
    for (const RowAssignedPiece& p : pieces) out.push_back(to_json(p));
    return out;
}

RowAssignment row_assignment_from_json(const Json& j) {
    if (!j.is_array()) schema_error("row assignment must be an array");
    RowAssignment out;
    for (const Json& e : j) out.push_back(row_assigned_from_json(e));
    return out;
}

Json to_json(const Instance& inst) {
    Json j{{"library", to_json(inst.lib)}, {"n", inst.n}, {"m", inst.m}};
    if (inst.tiling) j["tiling"] = to_json(*inst.tiling);
    if (inst.multiset) j["multiset"] = to_json(*inst.multiset);
    return j;
}

Instance instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("library")) schema_error("instance needs a \"library\"");
    Instance inst;
    inst.lib = library_from_json(j["library"]);
    if (j.contains("tiling")) inst.tiling = tiling_from_json(j["tiling"]);
    if (j.contains("n"))
        inst.n = int_field(j, "n");
    else if (inst.tiling)
        inst.n = inst.tiling->n;
    else
        schema_error("instance needs \"n\"");
    if (j.contains("m"))
        inst.m = int_field(j, "m");
    else if (inst.tiling)
        inst.m = inst.tiling->m;
    else
        schema_error("instance needs \"m\"");
    if (inst.tiling && (inst.tiling->n != inst.n || inst.tiling->m != inst.m))
        schema_error("instance board size disagrees with its tiling");
    if (j.contains("multiset")) inst.multiset = multiset_from_json(j["multiset"], &inst.lib);
    return inst;
}

Instance instance_from_paper_encoding(const std::string& text) {
    std::istringstream in(text);
    Instance inst;
    if (!(in >> inst.n >> inst.m)) schema_error("paper encoding: expected a \"n m\" header");
    struct Row {
        int h, w, x, y;
    };
    std::vector<Row> rows;
    Row r{};
    while (in >> r.h >> r.w >> r.x >> r.y) rows.push_back(r);
    if (!in.eof()) schema_error("paper encoding: trailing garbage after the placement rows");

    std::vector<Polyomino> pieces;
    for (const Row& row : rows) pieces.push_back(Polyomino::rect(row.h, row.w));
    inst.lib = make_library(std::move(pieces), TransformMode::fixed);
    Tiling t;
    t.n = inst.n;
    t.m = inst.m;
    for (const Row& row : rows) {
        const Polyomino rect = Polyomino::rect(row.h, row.w);
        int idx = static_cast<int>(std::find(inst.lib.pieces.begin(), inst.lib.pieces.end(), rect) -
                                   inst.lib.pieces.begin());
        t.placements.push_back({idx, 0, {row.x, row.y}});
    }
    inst.tiling = std::move(t);
    return inst;
}

std::string instance_to_paper_encoding(const Instance& inst) {
    if (!inst.tiling) throw std::invalid_argument("paper encoding: instance carries no tiling");
    std::ostringstream out;
    out << inst.n << ' ' << inst.m << '\n';
    for (const Placement& pl : inst.tiling->placements) {
        const Polyomino shape = transformed(inst.lib.pieces.at(static_cast<size_t>(pl.piece)), pl.transform);
        if (!shape.is_rectangle()) throw std::invalid_argument("paper encoding: placements must be rectangles");
        out << shape.height() << ' ' << shape.width() << ' ' << pl.at.x << ' ' << pl.at.y << '\n';
    }
    return out.str();
}

}  // namespace subtile
