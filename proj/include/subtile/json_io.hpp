#pragma once

#include <json.hpp>

#include "subtile/represent.hpp"

namespace subtile {

using Json = nlohmann::json;

// Polyomino: [[x,y], ...] or {"rect": [h, w]}.
Json to_json(const Polyomino& p);
Polyomino polyomino_from_json(const Json& j);

// Library: {"mode": "fixed" | "vertical-reflections" | "rotations-and-reflections",
//           "pieces": [polyomino, ...]}.
Json to_json(const Library& lib);
Library library_from_json(const Json& j);

std::string to_string(TransformMode mode);
TransformMode transform_mode_from_string(const std::string& s);

// Tiling: {"n": _, "m": _, "placements": [{"piece": i, "transform": t, "at": [x, y]}, ...]}.
Json to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);

// Multiset: [{"shape": polyomino, "count": k}, ...]. Entries may instead use
// {"piece": index} when a library is supplied for resolution.
Json to_json(const PieceMultiset& ms);
PieceMultiset multiset_from_json(const Json& j, const Library* lib = nullptr);

// Row-assigned rectangle: {"rect": [a, b], "rows": [l, len]}.
Json to_json(const RowAssignedPiece& p);
RowAssignedPiece row_assigned_from_json(const Json& j);
Json to_json(const RowAssignment& pieces);
RowAssignment row_assignment_from_json(const Json& j);

struct Instance {
    Library lib;
    int n = 0;
    int m = 0;
    std::optional<Tiling> tiling;
    std::optional<PieceMultiset> multiset;
};

Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// The decision problems' input convention, in decimal: a "n m" header line,
// then one "h w x y" line per rectangle placement (bottom-left cell at
// (x, y), (0,0) the board's bottom-left square).
Instance instance_from_paper_encoding(const std::string& text);
std::string instance_to_paper_encoding(const Instance& inst);

}  // namespace subtile
