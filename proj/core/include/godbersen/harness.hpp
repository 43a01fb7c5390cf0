#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "godbersen/polytope.hpp"

namespace godbersen {

enum class GenKind { Simplex, Cube, CrossPolytope, RandomHull, RandomSymmetric };

GenKind parse_gen_kind(const std::string& name);
std::string to_string(GenKind kind);

struct GenSpec {
  GenKind kind = GenKind::Simplex;
  std::size_t dim = 2;
  std::size_t vertex_count = 0;  // random kinds only
  std::uint64_t seed = 0;
  long denominator_bound = 4;
};

/// Deterministic in the spec. Random kinds draw coordinates p/q with
/// q <= denominator_bound and |p/q| <= 4; a degenerate draw is retried with
/// a derived seed up to 16 times before DegenerateInput is thrown.
///   simplex        -> hull{0, e_1, ..., e_n}
///   cube           -> [0, 1]^n
///   cross_polytope -> hull{+-e_i}
///   random_symmetric hulls {+-p_i} for ceil(vertex_count / 2) points.
Polytope generate(const GenSpec& spec);

/// Accepts either a JSON array of specs or {"bodies": [...]}. Each spec is
/// {"kind", "dim", "vertex_count"?, "seed"?, "denominator_bound"?, "count"?};
/// "count" expands to seeds seed, seed + 1, ...
std::vector<GenSpec> specs_from_json(const nlohmann::json& j);

/// Standard bodies for n = 2..4 plus seeded random hulls and symmetric
/// bodies (n <= 4, at most 14 vertices).
std::vector<GenSpec> default_corpus(std::uint64_t seed);

struct SweepRow {
  std::string body_id;
  std::string kind;
  std::size_t n = 0;
  std::size_t vertex_count = 0;
  std::size_t j = 0;
  Rat ratio;
  std::size_t tight_count = 0;
  bool ak_unique = false;
  bool moment_zero = false;
  bool inclusion_ok = false;
  std::string status = "ok";
};

struct SweepOptions {
  std::size_t jobs = 1;
  std::uint64_t seed = 42;
  bool floats = false;
  std::size_t random_directions = 5;
  std::size_t concavity_samples = 33;
};

struct SweepSummary {
  std::size_t bodies = 0;
  std::size_t rows = 0;
  std::size_t asserted = 0;    // hard checks evaluated
  std::size_t observed = 0;    // OBSERVATION lines (open cases, converses)
  std::size_t violated = 0;    // failed hard checks
  std::size_t errors = 0;      // per-body errors that were not violations
};

inline constexpr const char* kSweepHeader = "# godbersen-sweep v1";

/// Runs every check per body and writes the CSV (comment line, column
/// header, rows sorted by body id then j). Output bytes depend only on
/// specs and options.seed, not on options.jobs. Processing stops at the
/// first theorem violation; already finished bodies are still written.
SweepSummary sweep(const std::vector<GenSpec>& specs, std::ostream& csv, const SweepOptions& options,
                   std::ostream* log = nullptr);

}  // namespace godbersen
