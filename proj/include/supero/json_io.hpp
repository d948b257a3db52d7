// JSON forms of the domain values, plus the on-disk flag cache.
// Weights travel as their compact string form ("5,3,1|1"); every document
// carries an "algebra" field ("3x1", "2x2") so it re-parses without context.
#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "supero/bgg.hpp"
#include "supero/engine.hpp"
#include "supero/jantzen.hpp"
#include "supero/tables.hpp"

namespace supero {

std::string shape_name(const AlgebraShape& shape);               // "3x1"
std::optional<AlgebraShape> parse_shape(const std::string& s);   // "3x1", "3X1"

nlohmann::json weight_to_json(const WeightVector& w);
WeightVector weight_from_json(const nlohmann::json& j);  // throws invalid_argument

nlohmann::json flag_to_json(const VermaFlag& f);
VermaFlag flag_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const CompositionSeries& s);
CompositionSeries series_from_json(const nlohmann::json& j);

nlohmann::json atyp_to_json(const WeightVector& w, const AtypicalityData& a);
nlohmann::json block_to_json(const BlockId& b);
nlohmann::json certified_to_json(const CertifiedSet& c);
nlohmann::json deduction_to_json(const DeductionResult& r, bool with_trace);

// "M(5,3,1|1) + M(5,3,2|2)", "L(0,0|0,0) + 2 L(-1,0|0,-1) + ..."
std::string flag_to_text(const VermaFlag& f);
std::string series_to_text(const CompositionSeries& s);

// Advisory write-through cache of projective flags, keyed by (algebra, weight).
// A missing file, unreadable JSON or a version mismatch loads as empty; the
// unreadable case warns on stderr. Saving writes a temp file and renames it.
struct FlagCache {
  std::map<std::pair<std::string, std::string>, VermaFlag> flags;
  bool dirty = false;
};

inline constexpr int kCacheVersion = 1;

FlagCache load_cache(const std::string& path);
void save_cache(const FlagCache& cache, const std::string& path);
const VermaFlag* cache_find(const FlagCache& cache, const WeightVector& w);
void cache_put(FlagCache& cache, const WeightVector& w, const VermaFlag& flag);

}  // namespace supero
