// Reference tables: the closed-form Verma flag formulae for the six gl(3|1)
// head patterns and the four gl(2|2) head patterns, plus the gl(2|2)
// composition series, transcribed term by term from the published displays.
// Transcription is verbatim: repeated terms stay repeated, defective terms
// stay defective. validate_tables() compares every branch against the
// deduction engine and reports the differences; known_errata() is the audited
// list of displays the computation contradicts.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "supero/bgg.hpp"
#include "supero/flags.hpp"

namespace supero {

struct TableTerm {
  int mult = 1;      // printed coefficient (2 when the display writes 2M)
  std::string text;  // symbolic tuple, e.g. "a,b,c+1|c+1"; kept verbatim
};

struct TableCase {
  std::string family;  // head pattern, e.g. "(a,b,c|c)"
  std::string branch;  // case label inside the family, e.g. "1.2.1"
  std::string guard;   // branch condition as printed, e.g. "b = c+1, a > c+2"
  std::function<bool(int a, int b, int c)> applies;  // c unused for gl(2|2)
  std::vector<TableTerm> terms;
};

const std::vector<TableCase>& cases_gl31();
const std::vector<TableCase>& cases_gl22();
const std::vector<TableCase>& cases_composition_gl22();

struct TableMatch {
  const TableCase* tcase = nullptr;
  std::map<char, int> params;          // bindings for a, b, c
  VermaFlag flag;                      // instantiated well-formed terms
  std::vector<std::string> malformed;  // term texts that do not parse
};

// first head pattern in statement order that fits lam, then the first branch
// whose guard holds; throws std::invalid_argument for the wrong shape or
// atypicality degree, std::runtime_error when no branch covers the parameters
TableMatch match_gl31(const WeightVector& lam);
TableMatch match_gl22(const WeightVector& lam);
TableMatch match_composition_gl22(const WeightVector& mu);

VermaFlag table_gl31(const WeightVector& lam);
VermaFlag table_gl22(const WeightVector& lam);
CompositionSeries composition_gl22(const WeightVector& mu);

// instantiate one symbolic term; nullopt when the text is not a well-formed
// tuple for the shape (that is what "malformed" means above)
std::optional<WeightVector> instantiate_term(const AlgebraShape& shape, const std::string& text,
                                             const std::map<char, int>& params);

struct Discrepancy {
  std::string table;        // "gl31", "gl22", "gl22-composition"
  std::string family;
  std::string branch;
  std::string kind;         // "flag-mismatch", "series-mismatch", "malformed-term"
  WeightVector example;     // instantiation that exposed the difference
  std::string transcribed;  // rendered table value
  std::string computed;     // rendered engine / transpose value
  std::string note;
};

struct KnownErratum {
  std::string table;
  std::string family;
  std::string branch;
  std::string note;
};

// audited defects in the published displays; validate_tables() must report
// exactly these (family, branch) pairs and nothing else
const std::vector<KnownErratum>& known_errata();

// run every branch of every table on a guard-covering parameter grid, check
// the flag invariants and equality with the deduction engine (composition
// branches: equality with the transposed flags), and report one entry per
// deviating branch; also asserts that overlapping head patterns agree
std::vector<Discrepancy> validate_tables();

std::string discrepancies_to_json(const std::vector<Discrepancy>& ds);

}  // namespace supero
