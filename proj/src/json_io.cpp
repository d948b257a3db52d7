#include "supero/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace supero {

namespace {

using nlohmann::json;

WeightVector parse_or_throw(const AlgebraShape& shape, const std::string& text) {
  auto w = parse_weight(shape, text);
  if (!w) throw std::invalid_argument("bad weight string: " + text);
  return *w;
}

AlgebraShape shape_or_throw(const json& j) {
  auto s = parse_shape(j.value("algebra", std::string()));
  if (!s) throw std::invalid_argument("bad or missing algebra field");
  return *s;
}

}  // namespace

std::string shape_name(const AlgebraShape& shape) {
  return std::to_string(shape.m) + "x" + std::to_string(shape.n);
}

std::optional<AlgebraShape> parse_shape(const std::string& s) {
  if (s.size() != 3 || (s[1] != 'x' && s[1] != 'X')) return std::nullopt;
  if (s[0] < '1' || s[0] > '3' || s[2] < '1' || s[2] > '3') return std::nullopt;
  return AlgebraShape{s[0] - '0', s[2] - '0'};
}

json weight_to_json(const WeightVector& w) {
  return json{{"algebra", shape_name(w.shape)}, {"weight", to_string(w)}};
}

WeightVector weight_from_json(const json& j) {
  if (!j.is_object() || !j.contains("weight") || !j["weight"].is_string())
    throw std::invalid_argument("weight document needs a weight string");
  return parse_or_throw(shape_or_throw(j), j["weight"].get<std::string>());
}

json flag_to_json(const VermaFlag& f) {
  json entries = json::array();
  for (const auto& [w, k] : f.entries)
    entries.push_back(json{{"weight", to_string(w)}, {"mult", k}});
  return json{{"algebra", shape_name(f.shape)},
              {"total", f.total()},
              {"entries", std::move(entries)}};
}

VermaFlag flag_from_json(const json& j) {
  auto shape = shape_or_throw(j);
  VermaFlag f(shape);
  if (!j.contains("entries") || !j["entries"].is_array())
    throw std::invalid_argument("flag document needs an entries array");
  for (const auto& e : j["entries"]) {
    if (!e.contains("weight") || !e.contains("mult") || !e["mult"].is_number_integer())
      throw std::invalid_argument("bad flag entry");
    f.add(parse_or_throw(shape, e["weight"].get<std::string>()), e["mult"].get<int>());
  }
  return f;
}

json series_to_json(const CompositionSeries& s) {
  json entries = json::array();
  for (const auto& [w, k] : s.entries)
    entries.push_back(json{{"weight", to_string(w)}, {"mult", k}});
  return json{{"algebra", shape_name(s.shape)},
              {"total", s.total()},
              {"entries", std::move(entries)}};
}

CompositionSeries series_from_json(const json& j) {
  auto shape = shape_or_throw(j);
  CompositionSeries s;
  s.shape = shape;
  if (!j.contains("entries") || !j["entries"].is_array())
    throw std::invalid_argument("series document needs an entries array");
  for (const auto& e : j["entries"]) {
    if (!e.contains("weight") || !e.contains("mult") || !e["mult"].is_number_integer())
      throw std::invalid_argument("bad series entry");
    s.add(parse_or_throw(shape, e["weight"].get<std::string>()), e["mult"].get<int>());
  }
  return s;
}

json atyp_to_json(const WeightVector& w, const AtypicalityData& a) {
  json pairs = json::array();
  for (const auto& [qi, rj] : a.pairs) pairs.push_back(json::array({qi, rj}));
  return json{{"algebra", shape_name(w.shape)},
              {"weight", to_string(w)},
              {"degree", a.degree},
              {"pairs", std::move(pairs)}};
}

json block_to_json(const BlockId& b) {
  return json{{"algebra", shape_name(b.shape)},
              {"degree", b.degree},
              {"core_q", b.core_q},
              {"core_r", b.core_r}};
}

json certified_to_json(const CertifiedSet& c) {
  json entries = json::array();
  for (const auto& [w, tag] : c.weights)
    entries.push_back(json{{"weight", to_string(w)}, {"tag", cert_tag_name(tag)}});
  return json{{"algebra", shape_name(c.lam.shape)},
              {"weight", to_string(c.lam)},
              {"entries", std::move(entries)}};
}

json deduction_to_json(const DeductionResult& r, bool with_trace) {
  json doc = flag_to_json(r.flag);
  doc["weight"] = to_string(r.lam);
  if (with_trace) {
    json steps = json::array();
    for (const auto& t : r.trace) {
      steps.push_back(json{{"mu", to_string(t.mu)},
                           {"rep", rep_name(t.rep)},
                           {"tactic", tactic_name(t.tactic)},
                           {"projection", flag_to_json(t.projection)},
                           {"notes", t.notes}});
    }
    doc["trace"] = std::move(steps);
  }
  return doc;
}

std::string flag_to_text(const VermaFlag& f) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, k] : f.entries) {
    if (!first) out << " + ";
    first = false;
    if (k != 1) out << k << " ";
    out << "M(" << to_string(w) << ")";
  }
  if (first) out << "0";
  return out.str();
}

std::string series_to_text(const CompositionSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, k] : s.entries) {
    if (!first) out << " + ";
    first = false;
    if (k != 1) out << k << " ";
    out << "L(" << to_string(w) << ")";
  }
  if (first) out << "0";
  return out.str();
}

FlagCache load_cache(const std::string& path) {
  FlagCache cache;
  std::ifstream in(path);
  if (!in) return cache;  // absent is fine
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    std::fprintf(stderr, "warning: unreadable cache %s, recomputing\n", path.c_str());
    return cache;
  }
  if (doc.value("version", -1) != kCacheVersion) return cache;
  if (!doc.contains("flags") || !doc["flags"].is_array()) return cache;
  for (const auto& rec : doc["flags"]) {
    try {
      auto f = flag_from_json(rec);
      auto w = parse_or_throw(f.shape, rec.value("weight", std::string()));
      cache.flags[{shape_name(f.shape), to_string(w)}] = std::move(f);
    } catch (const std::invalid_argument&) {
      std::fprintf(stderr, "warning: bad cache record in %s, skipping\n", path.c_str());
    }
  }
  return cache;
}

void save_cache(const FlagCache& cache, const std::string& path) {
  json flags = json::array();
  for (const auto& [key, f] : cache.flags) {
    json rec = flag_to_json(f);
    rec["weight"] = key.second;
    flags.push_back(std::move(rec));
  }
  json doc{{"version", kCacheVersion}, {"flags", std::move(flags)}};
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache temp file " + tmp);
    out << doc.dump(2) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename cache into place at " + path);
}

const VermaFlag* cache_find(const FlagCache& cache, const WeightVector& w) {
  auto it = cache.flags.find({shape_name(w.shape), to_string(w)});
  return it == cache.flags.end() ? nullptr : &it->second;
}

void cache_put(FlagCache& cache, const WeightVector& w, const VermaFlag& flag) {
  auto key = std::make_pair(shape_name(w.shape), to_string(w));
  auto it = cache.flags.find(key);
  if (it != cache.flags.end() && it->second == flag) return;
  cache.flags[key] = flag;
  cache.dirty = true;
}

}  // namespace supero
