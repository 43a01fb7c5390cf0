#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "godbersen/ak_solver.hpp"
#include "godbersen/concave.hpp"
#include "godbersen/inclusion.hpp"
#include "godbersen/mixed_volume.hpp"
#include "godbersen/polytope.hpp"

// JSON formats. Rationals are written as "p/q" (or "k") strings in lowest
// terms; readers accept any equivalent fraction and bare JSON integers.
namespace godbersen::io {

using nlohmann::json;

Rat rat_from_json(const json& j);
json to_json(const Rat& r);
json to_json(const Vector& v);
Vector vector_from_json(const json& j);

/// {"dim": n, "vertices": [["p/q", ...], ...]}
json to_json(const Polytope& k);
Polytope polytope_from_json(const json& j);

/// {"dim": n, "rows": [{"w": [...], "beta": "p/q"}, ...]}
json to_json(const System& s);
System system_from_json(const json& j);

/// {"n", "volume", "entries": [{"j", "mixed", "ratio", "nmin_ok", "artstein_ok"}], "is_simplex"}
json to_json(const GodbersenReport& r);

/// [{"w": [...], "lhs": "p/q", "rhs": "p/q", "tight": bool}, ...]
json to_json(const TightnessProfile& t);

/// {"knots": [...], "values": [...]}
json to_json(const PLConcave& f);
PLConcave pl_concave_from_json(const json& j);

json to_json(const FeasibilityResult& r);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace godbersen::io
