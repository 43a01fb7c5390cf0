#include "godbersen/io.hpp"

#include <fstream>

#include "godbersen/errors.hpp"

namespace godbersen::io {

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("expected a rational string or integer, got " + j.dump());
}

json to_json(const Rat& r) { return r.str(); }

json to_json(const Vector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t dim_field(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long>() < 1) throw ParseError("'dim' must be a positive integer");
  return d.get<std::size_t>();
}

}  // namespace

json to_json(const Polytope& k) {
  json verts = json::array();
  for (const auto& v : k.vertices()) verts.push_back(to_json(v));
  return {{"dim", k.dim()}, {"vertices", verts}};
}

Polytope polytope_from_json(const json& j) {
  const std::size_t dim = dim_field(j);
  const json& verts = field(j, "vertices");
  if (!verts.is_array()) throw ParseError("'vertices' must be an array");
  std::vector<Point> pts;
  for (const auto& v : verts) {
    Point p = vector_from_json(v);
    if (p.size() != dim) throw DimensionMismatch("vertex length differs from 'dim'");
    pts.push_back(std::move(p));
  }
  return build_hull(pts);
}

json to_json(const System& s) {
  json rows = json::array();
  for (const auto& h : s.halfspaces) rows.push_back({{"w", to_json(h.normal)}, {"beta", to_json(h.rhs)}});
  return {{"dim", s.dim}, {"rows", rows}};
}

System system_from_json(const json& j) {
  System s;
  s.dim = dim_field(j);
  const json& rows = field(j, "rows");
  if (!rows.is_array() || rows.empty()) throw ParseError("'rows' must be a nonempty array");
  for (const auto& r : rows) {
    HalfSpace h{vector_from_json(field(r, "w")), rat_from_json(field(r, "beta"))};
    if (h.normal.size() != s.dim) throw DimensionMismatch("row normal length differs from 'dim'");
    if (is_zero(h.normal)) throw ZeroDirection("row with zero normal");
    s.halfspaces.push_back(std::move(h));
  }
  return s;
}

json to_json(const GodbersenReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"j", e.j},
                       {"mixed", to_json(e.mixed)},
                       {"ratio", to_json(e.ratio)},
                       {"nmin_ok", e.nmin_ok},
                       {"artstein_ok", e.artstein_ok}});
  }
  return {{"n", r.n}, {"volume", to_json(r.volume)}, {"entries", entries}, {"is_simplex", r.is_simplex}};
}

json to_json(const TightnessProfile& t) {
  json rows = json::array();
  for (const auto& e : t.entries) {
    rows.push_back({{"w", to_json(e.normal)}, {"lhs", to_json(e.lhs)}, {"rhs", to_json(e.rhs)}, {"tight", e.tight}});
  }
  return rows;
}

json to_json(const PLConcave& f) {
  json knots = json::array();
  json values = json::array();
  for (const auto& k : f.knots()) knots.push_back(to_json(k));
  for (const auto& v : f.values()) values.push_back(to_json(v));
  return {{"knots", knots}, {"values", values}};
}

PLConcave pl_concave_from_json(const json& j) {
  return PLConcave(vector_from_json(field(j, "knots")), vector_from_json(field(j, "values")));
}

json to_json(const FeasibilityResult& r) {
  json out = {{"status", r.feasible() ? "feasible" : "infeasible"}, {"unique", r.unique}};
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return out;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace godbersen::io
