// Matching, instantiation and audit of the reference tables.
#include "supero/tables.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"
#include "supero/engine.hpp"
#include "supero/jantzen.hpp"

namespace supero {

namespace {

// one coordinate: optional parameter letter followed by signed offsets, or a
// bare integer; anything else is malformed
std::optional<int> eval_coord(const std::string& raw, const std::map<char, int>& params) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) return std::nullopt;

  long long value = 0;
  size_t pos = 0;
  bool have_base = false;
  if (std::isalpha(static_cast<unsigned char>(s[0]))) {
    auto it = params.find(s[0]);
    if (it == params.end()) return std::nullopt;
    if (s.size() > 1 && s[1] != '+' && s[1] != '-') return std::nullopt;
    value = it->second;
    pos = 1;
    have_base = true;
  }
  while (pos < s.size()) {
    long long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = (s[pos] == '-') ? -1 : 1;
      ++pos;
    } else if (have_base) {
      return std::nullopt;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
    long long mag = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      mag = mag * 10 + (s[pos] - '0');
      ++pos;
    }
    value += sign * mag;
    have_base = true;
  }
  if (!have_base) return std::nullopt;
  return static_cast<int>(value);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, sep)) out.push_back(piece);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

struct HeadFit {
  std::string family;
  std::map<char, int> params;
};

std::vector<HeadFit> head_fits_gl31(const WeightVector& lam) {
  std::vector<HeadFit> fits;
  int q1 = lam.q[0], q2 = lam.q[1], q3 = lam.q[2], r = lam.r[0];
  auto add = [&](const char* family, int a, int b) {
    fits.push_back({family, {{'a', a}, {'b', b}, {'c', r}}});
  };
  if (q3 == r && q1 >= q2) add("(a,b,c|c)", q1, q2);
  if (q3 == r && q1 < q2) add("(b,a,c|c)", q2, q1);
  if (q2 == r && q1 >= q3) add("(a,c,b|c)", q1, q3);
  if (q2 == r && q1 < q3) add("(b,c,a|c)", q3, q1);
  if (q1 == r && q2 >= q3) add("(c,a,b|c)", q2, q3);
  if (q1 == r && q2 < q3) add("(c,b,a|c)", q3, q2);
  return fits;
}

std::vector<HeadFit> head_fits_gl22(const WeightVector& lam, bool composition) {
  std::vector<HeadFit> fits;
  int q1 = lam.q[0], q2 = lam.q[1], r1 = lam.r[0], r2 = lam.r[1];
  auto add = [&](const char* family, int a, int b) {
    std::string name = composition ? std::string("M") + family : std::string(family);
    fits.push_back({name, {{'a', a}, {'b', b}}});
  };
  if (q1 >= q2 && r1 == q2 && r2 == q1) add("(a,b|b,a)", q1, q2);
  if (q1 >= q2 && r1 == q1 && r2 == q2) add("(a,b|a,b)", q1, q2);
  if (q1 <= q2 && r1 == q1 && r2 == q2) add("(b,a|b,a)", q2, q1);
  if (q1 <= q2 && r1 == q2 && r2 == q1) add("(b,a|a,b)", q2, q1);
  return fits;
}

TableMatch make_match(const TableCase& tcase, const AlgebraShape& shape,
                      const std::map<char, int>& params) {
  TableMatch m;
  m.tcase = &tcase;
  m.params = params;
  m.flag = VermaFlag(shape);
  for (const auto& term : tcase.terms) {
    if (auto w = instantiate_term(shape, term.text, params))
      m.flag.add(*w, term.mult);
    else
      m.malformed.push_back(term.text);
  }
  return m;
}

// every (family fit, satisfied guard) in statement order; guards inside one
// family are mutually exclusive, so this yields at most one match per family
std::vector<TableMatch> all_matches(const std::vector<TableCase>& cases,
                                    const std::vector<HeadFit>& fits, const AlgebraShape& shape) {
  std::vector<TableMatch> out;
  for (const auto& fit : fits) {
    for (const auto& tcase : cases) {
      if (tcase.family != fit.family) continue;
      int a = fit.params.at('a');
      int b = fit.params.at('b');
      int c = fit.params.count('c') ? fit.params.at('c') : 0;
      if (tcase.applies(a, b, c)) out.push_back(make_match(tcase, shape, fit.params));
    }
  }
  return out;
}

template <typename Entries>
std::string entries_text(const Entries& entries) {
  std::string out;
  for (const auto& [w, k] : entries) {
    if (!out.empty()) out += " + ";
    if (k != 1) out += std::to_string(k) + "*";
    out += "(" + to_string(w) + ")";
  }
  return out.empty() ? "(empty)" : out;
}

std::string flag_defects(const VermaFlag& flag, const WeightVector& head) {
  std::vector<std::string> bits;
  if (flag.mult(head) != 1)
    bits.push_back("head multiplicity " + std::to_string(flag.mult(head)));
  int outside = 0, below = 0;
  for (const auto& [w, k] : flag.entries) {
    if (!is_linked(w, head))
      outside += k;
    else if (!bruhat_leq(head, w))
      below += k;
  }
  if (outside > 0) bits.push_back("entries outside the block: " + std::to_string(outside));
  if (below > 0) bits.push_back("entries below the head: " + std::to_string(below));
  VermaFlag cert = certified_weights(head).as_flag();
  if (!cert.subset_of(flag))
    bits.push_back("missing certified entries: " + std::to_string(cert.minus(flag).total()));
  std::string out;
  for (const auto& bit : bits) {
    if (!out.empty()) out += "; ";
    out += bit;
  }
  return out;
}

}  // namespace

std::optional<WeightVector> instantiate_term(const AlgebraShape& shape, const std::string& text,
                                             const std::map<char, int>& params) {
  auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
    return std::nullopt;
  auto qs = split_on(text.substr(0, bar), ',');
  auto rs = split_on(text.substr(bar + 1), ',');
  if (static_cast<int>(qs.size()) != shape.m || static_cast<int>(rs.size()) != shape.n)
    return std::nullopt;
  std::vector<int> q, r;
  for (const auto& piece : qs) {
    auto v = eval_coord(piece, params);
    if (!v) return std::nullopt;
    q.push_back(*v);
  }
  for (const auto& piece : rs) {
    auto v = eval_coord(piece, params);
    if (!v) return std::nullopt;
    r.push_back(*v);
  }
  return WeightVector(shape, q, r);
}

TableMatch match_gl31(const WeightVector& lam) {
  if (lam.shape != AlgebraShape{3, 1})
    throw std::invalid_argument("match_gl31: weight must live in gl(3|1)");
  if (atypicality(lam).degree != 1)
    throw std::invalid_argument("match_gl31: weight must have atypicality degree 1");
  auto ms = all_matches(cases_gl31(), head_fits_gl31(lam), lam.shape);
  if (ms.empty()) throw std::runtime_error("match_gl31: no branch covers " + to_string(lam));
  return ms.front();
}

TableMatch match_gl22(const WeightVector& lam) {
  if (lam.shape != AlgebraShape{2, 2})
    throw std::invalid_argument("match_gl22: weight must live in gl(2|2)");
  if (atypicality(lam).degree != 2)
    throw std::invalid_argument("match_gl22: weight must have atypicality degree 2");
  auto ms = all_matches(cases_gl22(), head_fits_gl22(lam, false), lam.shape);
  if (ms.empty()) throw std::runtime_error("match_gl22: no branch covers " + to_string(lam));
  return ms.front();
}

TableMatch match_composition_gl22(const WeightVector& mu) {
  if (mu.shape != AlgebraShape{2, 2})
    throw std::invalid_argument("match_composition_gl22: weight must live in gl(2|2)");
  if (atypicality(mu).degree != 2)
    throw std::invalid_argument("match_composition_gl22: weight must have atypicality degree 2");
  auto ms = all_matches(cases_composition_gl22(), head_fits_gl22(mu, true), mu.shape);
  if (ms.empty())
    throw std::runtime_error("match_composition_gl22: no branch covers " + to_string(mu));
  return ms.front();
}

VermaFlag table_gl31(const WeightVector& lam) { return match_gl31(lam).flag; }

VermaFlag table_gl22(const WeightVector& lam) { return match_gl22(lam).flag; }

CompositionSeries composition_gl22(const WeightVector& mu) {
  auto m = match_composition_gl22(mu);
  CompositionSeries s;
  s.shape = mu.shape;
  for (const auto& [w, k] : m.flag.entries) s.add(w, k);
  return s;
}

const std::vector<KnownErratum>& known_errata() {
  static const std::vector<KnownErratum> es = {
      {"gl31", "(a,b,c|c)", "2.3",
       "M(c+1,c,c|c+1) is printed twice; the computed flag has M(c,c+1,c|c+1) in place of "
       "the repeat"},
      {"gl31", "(b,c,a|c)", "1.2.1",
       "the display carries M(c+1,a,c+2|c+2), which the computed flag does not contain; the "
       "computed flag carries M(c+2,a,c+1|c+2) instead (the repeated M(a,c+1,c+1|c+1) is "
       "genuine)"},
      {"gl31", "(b,c,a|c)", "3.2.2",
       "M(c+1,b,c|c) is printed twice and the three entries raised along the pairing are "
       "missing; the computed flag has nine distinct entries"},
      {"gl31", "(c,a,b|c)", "2.1.2",
       "the display lists two entries; the computed flag also contains M(c+1,c,b|c)"},
      {"gl31", "(c,b,a|c)", "2.1.2",
       "M(c,b,c|c) is printed twice and lies outside the block; the computed flag has "
       "M(c+1,b,c|c) and M(c+1,c,b|c) in place of the repeats"},
      {"gl31", "(c,b,a|c)", "2.2",
       "the fourth term is printed as a malformed four-part even tuple; the computed flag "
       "ends with M(c+1,a,b|c+1)"},
      {"gl22-composition", "M(a,b|b,a)", "1.3",
       "the series is missing L(a,a-2|a-2,a), L(a,a-2|a,a-2), L(a-2,a|a-2,a) and "
       "L(a-2,a|a,a-2)"},
      {"gl22-composition", "M(a,b|a,b)", "2.3",
       "the series is missing L(a,a-2|a,a-2) and L(a-2,a|a,a-2)"},
      {"gl22-composition", "M(b,a|b,a)", "1.1",
       "the seventh term is printed with transposed even coordinates L(a-1,b-1|a-1,b-1); the "
       "computed series has L(b-1,a-1|b-1,a-1)"},
      {"gl22-composition", "M(b,a|b,a)", "1.3",
       "the head label is misprinted and the series is missing L(a-2,a|a-2,a) and "
       "L(a-2,a|a,a-2)"},
      {"gl22-composition", "M(b,a|a,b)", "2.3",
       "the series is missing L(a-2,a|a,a-2)"},
  };
  return es;
}

std::vector<Discrepancy> validate_tables() {
  std::vector<Discrepancy> out;
  std::set<std::tuple<std::string, std::string, std::string, std::string>> seen;
  auto report = [&](const std::string& table, const TableCase* tcase, const std::string& kind,
                    const WeightVector& example, std::string transcribed, std::string computed,
                    std::string note) {
    if (!seen.insert({table, tcase->family, tcase->branch, kind}).second) return;
    out.push_back({table, tcase->family, tcase->branch, kind, example, std::move(transcribed),
                   std::move(computed), std::move(note)});
  };

  Engine eng;

  auto check_projective = [&](const std::string& table, const std::vector<TableCase>& cases,
                              const std::vector<HeadFit>& fits, const WeightVector& lam,
                              std::map<std::pair<std::string, std::string>, int>& hits) {
    auto ms = all_matches(cases, fits, lam.shape);
    if (ms.empty()) return;
    const auto& m = ms.front();
    hits[{m.tcase->family, m.tcase->branch}]++;
    for (const auto& text : m.malformed)
      report(table, m.tcase, "malformed-term", lam, text, "",
             "the term does not parse as a weight tuple");
    VermaFlag computed;
    try {
      computed = eng.projective_flag(lam);
    } catch (const std::exception& e) {
      report(table, m.tcase, "engine-failure", lam, entries_text(m.flag.entries), "", e.what());
      return;
    }
    if (m.flag != computed)
      report(table, m.tcase, "flag-mismatch", lam, entries_text(m.flag.entries),
             entries_text(computed.entries), flag_defects(m.flag, lam));
    for (size_t i = 1; i < ms.size(); ++i)
      if (ms[i].flag != m.flag)
        report(table, ms[i].tcase, "overlap-disagreement", lam, entries_text(ms[i].flag.entries),
               entries_text(m.flag.entries),
               "a later head pattern covering the same weight gives a different flag");
  };

  // gl(3|1): every branch of every head pattern, two choices of the tied value
  const AlgebraShape g31{3, 1};
  std::map<std::pair<std::string, std::string>, int> hits31;
  std::set<WeightVector> done31;
  for (int c : {0, 2}) {
    for (int a = c - 3; a <= c + 4; ++a) {
      for (int b = c - 3; b <= a; ++b) {
        const WeightVector heads[] = {
            WeightVector(g31, {a, b, c}, {c}), WeightVector(g31, {b, a, c}, {c}),
            WeightVector(g31, {a, c, b}, {c}), WeightVector(g31, {b, c, a}, {c}),
            WeightVector(g31, {c, a, b}, {c}), WeightVector(g31, {c, b, a}, {c})};
        for (const auto& lam : heads) {
          if (!done31.insert(lam).second) continue;
          check_projective("gl31", cases_gl31(), head_fits_gl31(lam), lam, hits31);
        }
      }
    }
  }
  for (const auto& tcase : cases_gl31())
    if (!hits31.count({tcase.family, tcase.branch}))
      report("gl31", &tcase, "guard-gap", WeightVector(g31, {0, 0, 0}, {0}), "", "",
             "no grid weight reached this branch");

  // gl(2|2) projectives
  const AlgebraShape g22{2, 2};
  std::map<std::pair<std::string, std::string>, int> hits22;
  std::set<WeightVector> done22;
  for (int a : {0, 3}) {
    for (int b = a - 3; b <= a; ++b) {
      const WeightVector heads[] = {
          WeightVector(g22, {a, b}, {b, a}), WeightVector(g22, {a, b}, {a, b}),
          WeightVector(g22, {b, a}, {b, a}), WeightVector(g22, {b, a}, {a, b})};
      for (const auto& lam : heads) {
        if (!done22.insert(lam).second) continue;
        check_projective("gl22", cases_gl22(), head_fits_gl22(lam, false), lam, hits22);
      }
    }
  }
  for (const auto& tcase : cases_gl22())
    if (!hits22.count({tcase.family, tcase.branch}))
      report("gl22", &tcase, "guard-gap", WeightVector(g22, {0, 0}, {0, 0}), "", "",
             "no grid weight reached this branch");

  // gl(2|2) composition series against the transposed engine flags
  FlagSource source = [&eng](const WeightVector& w) { return eng.projective_flag(w); };
  std::map<std::pair<std::string, std::string>, int> hitsc;
  std::set<WeightVector> donec;
  for (int a : {0, 3}) {
    for (int b = a - 3; b <= a; ++b) {
      const WeightVector mus[] = {
          WeightVector(g22, {a, b}, {b, a}), WeightVector(g22, {a, b}, {a, b}),
          WeightVector(g22, {b, a}, {b, a}), WeightVector(g22, {b, a}, {a, b})};
      for (const auto& mu : mus) {
        if (!donec.insert(mu).second) continue;
        auto ms = all_matches(cases_composition_gl22(), head_fits_gl22(mu, true), mu.shape);
        if (ms.empty()) continue;
        const auto& m = ms.front();
        hitsc[{m.tcase->family, m.tcase->branch}]++;
        for (const auto& text : m.malformed)
          report("gl22-composition", m.tcase, "malformed-term", mu, text, "",
                 "the term does not parse as a weight tuple");
        CompositionSeries transcribed;
        transcribed.shape = mu.shape;
        for (const auto& [w, k] : m.flag.entries) transcribed.add(w, k);
        CompositionSeries computed;
        try {
          computed = composition_series(mu, 3, source);
        } catch (const std::exception& e) {
          report("gl22-composition", m.tcase, "engine-failure", mu,
                 entries_text(transcribed.entries), "", e.what());
          continue;
        }
        if (!(transcribed == computed))
          report("gl22-composition", m.tcase, "series-mismatch", mu,
                 entries_text(transcribed.entries), entries_text(computed.entries), "");
        for (size_t i = 1; i < ms.size(); ++i)
          if (ms[i].flag != m.flag)
            report("gl22-composition", ms[i].tcase, "overlap-disagreement", mu,
                   entries_text(ms[i].flag.entries), entries_text(m.flag.entries),
                   "a later head pattern covering the same weight gives a different series");
      }
    }
  }
  for (const auto& tcase : cases_composition_gl22())
    if (!hitsc.count({tcase.family, tcase.branch}))
      report("gl22-composition", &tcase, "guard-gap", WeightVector(g22, {0, 0}, {0, 0}), "", "",
             "no grid weight reached this branch");

  return out;
}

std::string discrepancies_to_json(const std::vector<Discrepancy>& ds) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& d : ds) {
    arr.push_back({{"table", d.table},
                   {"family", d.family},
                   {"branch", d.branch},
                   {"kind", d.kind},
                   {"example", to_string(d.example)},
                   {"transcribed", d.transcribed},
                   {"computed", d.computed},
                   {"note", d.note}});
  }
  return arr.dump(2);
}

}  // namespace supero
