// Verbatim case lists for the reference tables. Each term string is one
// printed tuple; "2*" marks a printed coefficient of 2. Repeated and defective
// terms are transcribed as printed, the audit lives in validate_tables().
#include <sstream>

#include "supero/tables.hpp"

namespace supero {

namespace {

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<TableTerm> terms(const std::string& spec) {
  std::vector<TableTerm> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    TableTerm t;
    if (item.size() > 2 && item[1] == '*') {
      t.mult = item[0] - '0';
      item = trim(item.substr(2));
    }
    t.text = item;
    out.push_back(t);
  }
  return out;
}

using Pred = std::function<bool(int, int, int)>;

TableCase tc(const char* family, const char* branch, const char* guard, Pred applies,
             const std::string& spec) {
  return TableCase{family, branch, guard, std::move(applies), terms(spec)};
}

}  // namespace

const std::vector<TableCase>& cases_gl31() {
  static const std::vector<TableCase> cs = {
      // head (a,b,c|c), a >= b
      tc("(a,b,c|c)", "1.1", "b > c+1",
         [](int, int b, int c) { return b > c + 1; },
         "a,b,c|c; a,b,c+1|c+1"),
      tc("(a,b,c|c)", "1.2.1", "b = c+1, a > c+2",
         [](int a, int b, int c) { return b == c + 1 && a > c + 2; },
         "a,c+1,c|c; a,c+1,c+1|c+1; a,c+2,c+1|c+2"),
      tc("(a,b,c|c)", "1.2.2", "b = c+1, a = c+2",
         [](int a, int b, int c) { return b == c + 1 && a == c + 2; },
         "c+2,c+1,c|c; c+2,c+2,c+1|c+2; c+2,c+1,c+1|c+1; c+3,c+2,c+1|c+3"),
      tc("(a,b,c|c)", "1.2.3", "b = c+1, a = c+1",
         [](int a, int b, int c) { return b == c + 1 && a == c + 1; },
         "c+1,c+1,c|c; c+1,c+1,c+1|c+1; c+1,c+2,c+1|c+2; c+2,c+1,c+1|c+2"),
      tc("(a,b,c|c)", "2.1", "b = c, a > c+1",
         [](int a, int b, int c) { return b == c && a > c + 1; },
         "a,c,c|c; a,c,c+1|c+1; a,c+1,c|c+1"),
      tc("(a,b,c|c)", "2.2", "b = c, a = c+1",
         [](int a, int b, int c) { return b == c && a == c + 1; },
         "c+1,c,c|c; c+2,c+1,c|c+2; c+1,c,c+1|c+1; c+1,c+1,c|c+1; c+2,c,c+1|c+2"),
      tc("(a,b,c|c)", "2.3", "b = c, a = c",
         [](int a, int b, int c) { return b == c && a == c; },
         "c,c,c|c; c,c,c+1|c+1; c+1,c,c|c+1; c+1,c,c|c+1"),
      tc("(a,b,c|c)", "3.1.1", "b < c, a > c+1",
         [](int a, int b, int c) { return b < c && a > c + 1; },
         "a,b,c|c; a,b,c+1|c+1; a,c,b|c; a,c+1,b|c+1"),
      tc("(a,b,c|c)", "3.1.2", "b < c, a = c+1",
         [](int a, int b, int c) { return b < c && a == c + 1; },
         "c+1,b,c|c; c+1,b,c+1|c+1; c+2,b,c+1|c+2; c+1,c,b|c; c+1,c+1,b|c+1; c+2,c+1,b|c+2"),
      tc("(a,b,c|c)", "3.2", "b < c, a = c",
         [](int a, int b, int c) { return b < c && a == c; },
         "c,b,c|c; c,b,c+1|c+1; c+1,b,c|c+1; c,c,b|c; c,c+1,b|c+1; c+1,c,b|c+1"),
      tc("(a,b,c|c)", "3.3.1", "b < c, a < c, a > b",
         [](int a, int b, int c) { return b < c && a < c && a > b; },
         "a,b,c|c; a,b,c+1|c+1; a,c,b|c; c,a,b|c; a,c+1,b|c+1; c+1,a,b|c+1; c,b,a|c; "
         "c+1,b,a|c+1"),
      tc("(a,b,c|c)", "3.3.2", "b < c, a = b",
         [](int a, int b, int c) { return b < c && a == b; },
         "b,b,c|c; b,b,c+1|c+1; b,c,b|c; b,c+1,b|c+1; c,b,b|c; c+1,b,b|c+1"),

      // head (b,a,c|c), a > b
      tc("(b,a,c|c)", "1.1", "b > c+1, a > b",
         [](int a, int b, int c) { return b > c + 1 && a > b; },
         "b,a,c|c; b,a,c+1|c+1; a,b,c|c; a,b,c+1|c+1"),
      tc("(b,a,c|c)", "1.2.1", "b = c+1, a > c+2",
         [](int a, int b, int c) { return b == c + 1 && a > c + 2; },
         "c+1,a,c|c; c+2,a,c+1|c+2; c+1,a,c+1|c+1; a,c+1,c|c; a,c+2,c+1|c+2; a,c+1,c+1|c+1"),
      tc("(b,a,c|c)", "1.2.2", "b = c+1, a = c+2",
         [](int a, int b, int c) { return b == c + 1 && a == c + 2; },
         "c+1,c+2,c|c; c+2,c+1,c|c; c+1,c+2,c+1|c+1; c+2,c+1,c+1|c+1; c+2,c+2,c+1|c+2"),
      tc("(b,a,c|c)", "2.1", "b = c, a > c+1",
         [](int a, int b, int c) { return b == c && a > c + 1; },
         "c,a,c|c; c,a,c+1|c+1; c+1,a,c|c+1; a,c,c|c; a,c,c+1|c+1; a,c+1,c|c+1"),
      tc("(b,a,c|c)", "2.2", "b = c, a = c+1",
         [](int a, int b, int c) { return b == c && a == c + 1; },
         "c,c+1,c|c; c,c+2,c+1|c+2; c+1,c+2,c|c+2; c,c+1,c+1|c+1; 2* c+1,c+1,c|c+1; "
         "c+2,c,c+1|c+2; c+2,c+1,c|c+2; c+1,c,c+1|c+1; c+1,c,c|c"),
      tc("(b,a,c|c)", "3.1.1", "b < c, a > c+1",
         [](int a, int b, int c) { return b < c && a > c + 1; },
         "b,a,c|c; a,b,c|c; a,c,b|c; c,a,b|c; b,a,c+1|c+1; a,b,c+1|c+1; a,c+1,b|c+1; "
         "c+1,a,b|c+1"),
      tc("(b,a,c|c)", "3.1.2", "b < c, a = c+1",
         [](int a, int b, int c) { return b < c && a == c + 1; },
         "b,c+1,c|c; b,c+2,c+1|c+2; b,c+1,c+1|c+1; c+1,b,c|c; c+2,b,c+1|c+2; c+1,b,c+1|c+1; "
         "c,c+1,b|c; c+1,c+2,b|c+2; c+1,c+1,b|c+1; c+1,c,b|c; c+2,c+1,b|c+2; c+1,c+1,b|c+1"),
      tc("(b,a,c|c)", "3.2", "b < c, a = c",
         [](int a, int b, int c) { return b < c && a == c; },
         "b,c,c|c; b,c,c+1|c+1; b,c+1,c|c+1; c,b,c|c; c,b,c+1|c+1; c+1,b,c|c+1; c,c,b|c; "
         "c,c+1,b|c+1; c+1,c,b|c+1"),
      tc("(b,a,c|c)", "3.3", "b < c, a < c, a > b",
         [](int a, int b, int c) { return b < c && a < c && a > b; },
         "b,a,c|c; b,a,c+1|c+1; b,c,a|c; b,c+1,a|c+1; a,b,c|c; a,b,c+1|c+1; c,b,a|c; "
         "c+1,b,a|c+1; a,c,b|c; a,c+1,b|c+1; c,a,b|c; c+1,a,b|c+1"),

      // head (a,c,b|c), a >= b
      tc("(a,c,b|c)", "1.1", "b > c+1",
         [](int, int b, int c) { return b > c + 1; },
         "a,c,b|c; a,c+1,b|c+1; a,b,c|c; a,b,c+1|c+1"),
      tc("(a,c,b|c)", "1.2.1", "b = c+1, a > c+1",
         [](int a, int b, int c) { return b == c + 1 && a > c + 1; },
         "a,c,c+1|c; a,c+1,c+1|c+1; a,c+1,c|c"),
      tc("(a,c,b|c)", "1.2.2", "b = c+1, a = c+1",
         [](int a, int b, int c) { return b == c + 1 && a == c + 1; },
         "c+1,c,c+1|c; c+1,c+1,c+1|c+1; c+2,c+1,c+1|c+2; c+1,c+1,c|c"),
      tc("(a,c,b|c)", "2.1.1", "b < c, a > c+1",
         [](int a, int b, int c) { return b < c && a > c + 1; },
         "a,c,b|c; a,c+1,b|c+1"),
      tc("(a,c,b|c)", "2.1.2", "b < c, a = c+1",
         [](int a, int b, int c) { return b < c && a == c + 1; },
         "c+1,c,b|c; c+1,c+1,b|c+1; c+2,c+1,b|c+2"),
      tc("(a,c,b|c)", "2.2", "b < c, a = c",
         [](int a, int b, int c) { return b < c && a == c; },
         "c,c,b|c; c,c+1,b|c+1; c+1,c,b|c+1"),
      tc("(a,c,b|c)", "2.3", "b < c, a < c",
         [](int a, int b, int c) { return b < c && a < c; },
         "a,c,b|c; a,c+1,b|c+1; c,a,b|c; c+1,a,b|c+1"),

      // head (b,c,a|c), a > b
      tc("(b,c,a|c)", "1.1", "b > c+1, a > b",
         [](int a, int b, int c) { return b > c + 1 && a > b; },
         "b,c,a|c; b,a,c|c; a,b,c|c; a,c,b|c; b,c+1,a|c+1; b,a,c+1|c+1; a,b,c+1|c+1; "
         "a,c+1,b|c+1"),
      tc("(b,c,a|c)", "1.2.1", "b = c+1, a > c+2",
         [](int a, int b, int c) { return b == c + 1 && a > c + 2; },
         "c+1,c,a|c; c+2,c+1,a|c+2; c+1,c+1,a|c+1; a,c,c+1|c; a,c+1,c+2|c+2; a,c+1,c+1|c+1; "
         "c+1,a,c|c; c+1,a,c+2|c+2; c+1,a,c+1|c+1; a,c+1,c|c; a,c+2,c+1|c+2; a,c+1,c+1|c+1"),
      tc("(b,c,a|c)", "1.2.2", "b = c+1, a = c+2",
         [](int a, int b, int c) { return b == c + 1 && a == c + 2; },
         "c+1,c,c+2|c; c+2,c,c+1|c; c+1,c+1,c+2|c+1; c+2,c+1,c+1|c+1; c+2,c+1,c+2|c+2; "
         "c+2,c+1,c|c; c+1,c+2,c|c; c+1,c+2,c+1|c+1; c+2,c+1,c+1|c+1; c+2,c+2,c+1|c+2"),
      tc("(b,c,a|c)", "2.1", "b = c, a > c+1",
         [](int a, int b, int c) { return b == c && a > c + 1; },
         "c,c,a|c; c+1,c,a|c+1; c,c+1,a|c+1; c,a,c|c; c+1,a,c|c+1; c,a,c+1|c+1; a,c,c|c; "
         "a,c+1,c|c+1; a,c,c+1|c+1"),
      tc("(b,c,a|c)", "2.2", "b = c, a = c+1",
         [](int a, int b, int c) { return b == c && a == c + 1; },
         "c,c,c+1|c; c+1,c,c|c; c,c+1,c|c; c,c+1,c+1|c+1; c+1,c,c+1|c+1; c+1,c+1,c|c+1"),
      tc("(b,c,a|c)", "3.1", "b < c, a > c+1",
         [](int a, int b, int c) { return b < c && a > c + 1; },
         "b,c,a|c; b,c+1,a|c+1; c,b,a|c; c+1,b,a|c+1; a,b,c|c; a,b,c+1|c+1; a,c,b|c; "
         "a,c+1,b|c+1; b,a,c|c; b,a,c+1|c+1; c,a,b|c; c+1,a,b|c+1"),
      tc("(b,c,a|c)", "3.2.1", "b = c-1, a = c+1",
         [](int a, int b, int c) { return b == c - 1 && a == c + 1; },
         "c-1,c,c+1|c; c-1,c+1,c|c; c-1,c+1,c+1|c+1; c,c-1,c+1|c; c+1,c-1,c|c; "
         "c+1,c-1,c+1|c+1; c,c+1,c-1|c; c+1,c,c-1|c; c+1,c+1,c-1|c+1"),
      tc("(b,c,a|c)", "3.2.2", "b < c-1, a = c+1",
         [](int a, int b, int c) { return b < c - 1 && a == c + 1; },
         "b,c,c+1|c; b,c+1,c|c; c,b,c+1|c; c,c+1,b|c; c+1,b,c|c; c+1,b,c|c"),
      tc("(b,c,a|c)", "3.3", "b < c, a < c, a > b",
         [](int a, int b, int c) { return b < c && a < c && a > b; },
         "b,c,a|c; b,c+1,a|c+1; c,b,a|c; c+1,b,a|c+1; a,c,b|c; a,c+1,b|c+1; c,a,b|c; "
         "c+1,a,b|c+1"),

      // head (c,a,b|c), a >= b
      tc("(c,a,b|c)", "1.1.1", "b > c+1, a > b",
         [](int a, int b, int c) { return b > c + 1 && a > b; },
         "c,a,b|c; c+1,a,b|c+1; a,c,b|c; a,c+1,b|c+1; b,a,c|c; b,a,c+1|c+1; a,b,c|c; "
         "a,b,c+1|c+1"),
      tc("(c,a,b|c)", "1.1.2", "b > c+1, a = b",
         [](int a, int b, int c) { return b > c + 1 && a == b; },
         "c,b,b|c; c+1,b,b|c+1; b,c,b|c; b,c+1,b|c+1; b,b,c|c; b,b,c+1|c+1"),
      tc("(c,a,b|c)", "1.2.1", "b = c+1, a > c+1",
         [](int a, int b, int c) { return b == c + 1 && a > c + 1; },
         "c,a,c+1|c; c+1,a,c|c; c+1,a,c+1|c+1; a,c,c+1|c; a,c+1,c|c; a,c+1,c+1|c+1"),
      tc("(c,a,b|c)", "1.2.2", "b = c+1, a = c+1",
         [](int a, int b, int c) { return b == c + 1 && a == c + 1; },
         "c,c+1,c+1|c; c+1,c,c+1|c; c+1,c+1,c|c; c+1,c+1,c+1|c+1"),
      tc("(c,a,b|c)", "2.1.1", "b < c, a > c+1",
         [](int a, int b, int c) { return b < c && a > c + 1; },
         "c,a,b|c; c+1,a,b|c+1; a,c,b|c; a,c+1,b|c+1"),
      tc("(c,a,b|c)", "2.1.2", "b < c, a = c+1",
         [](int a, int b, int c) { return b < c && a == c + 1; },
         "c,c+1,b|c; c+1,c+1,b|c+1"),
      tc("(c,a,b|c)", "2.2", "b < c, a < c",
         [](int a, int b, int c) { return b < c && a < c; },
         "c,a,b|c; c+1,a,b|c+1"),

      // head (c,b,a|c), a > b
      tc("(c,b,a|c)", "1.1", "b > c+1, a > b",
         [](int a, int b, int c) { return b > c + 1 && a > b; },
         "c,b,a|c; c+1,b,a|c+1; b,c,a|c; b,c+1,a|c+1; c,a,b|c; c+1,a,b|c+1; b,a,c|c; "
         "b,a,c+1|c+1; a,c,b|c; a,c+1,b|c+1; a,b,c|c; a,b,c+1|c+1"),
      tc("(c,b,a|c)", "1.2", "b = c+1, a > c+1",
         [](int a, int b, int c) { return b == c + 1 && a > c + 1; },
         "c,c+1,a|c; c+1,c,a|c; c+1,c+1,a|c+1; c,a,c+1|c; c+1,a,c|c; c+1,a,c+1|c+1; "
         "a,c,c+1|c; a,c+1,c|c; a,c+1,c+1|c+1"),
      tc("(c,b,a|c)", "2.1.1", "b < c, a > c+1",
         [](int a, int b, int c) { return b < c && a > c + 1; },
         "c,b,a|c; c+1,b,a|c+1; c,a,b|c; c+1,a,b|c+1; a,b,c|c; a,b,c+1|c+1; a,c,b|c; "
         "a,c+1,b|c+1"),
      tc("(c,b,a|c)", "2.1.2", "b < c, a = c+1",
         [](int a, int b, int c) { return b < c && a == c + 1; },
         "c,b,c+1|c; c,b,c|c; c+1,b,c+1|c+1; c,c+1,b|c; c,b,c|c; c+1,c+1,b|c+1"),
      tc("(c,b,a|c)", "2.2", "b < c, a < c, a > b",
         [](int a, int b, int c) { return b < c && a < c && a > b; },
         "c,b,a|c; c+1,b,a|c+1; c,a,b|c; c+1,a,b,c+1"),
  };
  return cs;
}

const std::vector<TableCase>& cases_gl22() {
  static const std::vector<TableCase> cs = {
      // head (a,b|b,a), a >= b
      tc("(a,b|b,a)", "1.1", "b < a-1",
         [](int a, int b, int) { return b < a - 1; },
         "a,b|b,a; a+1,b|b,a+1; a,b+1|b+1,a; a+1,b+1|b+1,a+1"),
      tc("(a,b|b,a)", "1.2", "b = a-1",
         [](int a, int b, int) { return b == a - 1; },
         "a,a-1|a-1,a; a+1,a-1|a-1,a+1; a,a|a,a; a,a+1|a,a+1; 2* a+1,a|a,a+1; a+1,a|a+1,a; "
         "a+1,a+1|a+1,a+1; a+2,a|a,a+2; a+2,a+1|a+1,a+2"),
      tc("(a,b|b,a)", "1.3", "b = a",
         [](int a, int b, int) { return b == a; },
         "a,a|a,a; a+1,a|a,a+1; a,a+1|a+1,a; a+1,a+1|a+1,a+1; a+1,a|a+1,a; a,a+1|a,a+1"),

      // head (a,b|a,b), a > b
      tc("(a,b|a,b)", "2.1", "b < a-1",
         [](int a, int b, int) { return b < a - 1; },
         "a,b|a,b; a+1,b|a+1,b; a,b+1|a,b+1; a+1,b+1|a+1,b+1; a,b|b,a; a+1,b|b,a+1; "
         "a,b+1|b+1,a; a+1,b+1|b+1,a+1"),
      tc("(a,b|a,b)", "2.2", "b = a-1",
         [](int a, int b, int) { return b == a - 1; },
         "a,a-1|a,a-1; a+1,a|a,a+1; a+1,a|a+1,a; a+1,a-1|a-1,a+1; a+1,a-1|a+1,a-1; a,a|a,a; "
         "a,a-1|a-1,a"),

      // head (b,a|b,a), a > b
      tc("(b,a|b,a)", "1.1", "b < a-1",
         [](int a, int b, int) { return b < a - 1; },
         "b,a|b,a; b,a+1|b,a+1; b+1,a|b+1,a; b+1,a+1|b+1,a+1; a,b|b,a; a+1,b|b,a+1; "
         "a,b+1|b+1,a; a+1,b+1|b+1,a+1"),
      tc("(b,a|b,a)", "1.2", "b = a-1",
         [](int a, int b, int) { return b == a - 1; },
         "a-1,a|a-1,a; a,a-1|a-1,a; a,a|a,a; a-1,a+1|a-1,a+1; a,a+1|a,a+1; a+1,a-1|a-1,a+1; "
         "a+1,a|a,a+1"),

      // head (b,a|a,b), a > b
      tc("(b,a|a,b)", "2.1", "b < a-1",
         [](int a, int b, int) { return b < a - 1; },
         "b,a|a,b; b,a+1|a+1,b; b+1,a|a,b+1; b+1,a+1|a+1,b+1; b,a|b,a; b,a+1|b,a+1; "
         "b+1,a|b+1,a; b+1,a+1|b+1,a+1; a,b|a,b; a+1,b|a+1,b; a,b+1|a,b+1; a+1,b+1|a+1,b+1; "
         "a,b|b,a; a+1,b|b,a+1; a,b+1|b+1,a; a+1,b+1|b+1,a+1"),
      tc("(b,a|a,b)", "2.2", "b = a-1",
         [](int a, int b, int) { return b == a - 1; },
         "a-1,a|a,a-1; a,a+1|a,a+1; a,a+1|a+1,a; a-1,a+1|a+1,a-1; a-1,a+1|a-1,a+1; "
         "a-1,a|a-1,a; a,a-1|a,a-1; a+1,a|a,a+1; a+1,a|a+1,a; a+1,a-1|a-1,a+1; "
         "a+1,a-1|a+1,a-1; 2* a,a|a,a; a,a-1|a-1,a"),
  };
  return cs;
}

const std::vector<TableCase>& cases_composition_gl22() {
  static const std::vector<TableCase> cs = {
      // series of M(a,b|b,a), a >= b
      tc("M(a,b|b,a)", "1.1", "b < a-2",
         [](int a, int b, int) { return b < a - 2; },
         "a,b|b,a; a,b|a,b; b,a|b,a; b,a|a,b; a-1,b|b,a-1; a-1,b|a-1,b; b,a-1|b,a-1; "
         "b,a-1|a-1,b; a,b-1|b-1,a; a,b-1|a,b-1; b-1,a|b-1,a; b-1,a|a,b-1; "
         "a-1,b-1|b-1,a-1; a-1,b-1|a-1,b-1; b-1,a-1|b-1,a-1; b-1,a-1|a-1,b-1"),
      tc("M(a,b|b,a)", "1.2", "b = a-2",
         [](int a, int b, int) { return b == a - 2; },
         "a,a-2|a-2,a; a,a-2|a,a-2; a-2,a|a-2,a; a-2,a|a,a-2; a,a-3|a-3,a; a,a-3|a,a-3; "
         "a-3,a|a-3,a; a-3,a|a,a-3; a-1,a-3|a-3,a-1; a-1,a-3|a-1,a-3; a-3,a-1|a-3,a-1; "
         "a-3,a-1|a-1,a-3; a-1,a-2|a-2,a-1; a-1,a-2|a-1,a-2; a-2,a-1|a-2,a-1; "
         "a-2,a-1|a-1,a-2; a-2,a-3|a-3,a-2"),
      tc("M(a,b|b,a)", "1.3", "b = a-1",
         [](int a, int b, int) { return b == a - 1; },
         "a,a-1|a-1,a; a-1,a|a-1,a; a,a-1|a,a-1; a-1,a|a,a-1; 2* a-1,a-2|a-2,a-1; "
         "a-2,a-1|a-2,a-1; a-1,a-2|a-1,a-2; a-2,a-1|a-1,a-2; a-1,a-1|a-1,a-1; "
         "a-2,a-3|a-3,a-2"),
      tc("M(a,b|b,a)", "1.4", "b = a",
         [](int a, int b, int) { return b == a; },
         "a,a-1|a-1,a; a,a|a,a; a,a-1|a,a-1; a-1,a|a-1,a; 2* a-1,a|a,a-1; "
         "a-1,a-2|a-2,a-1; a-1,a-1|a-1,a-1"),

      // series of M(a,b|a,b), a > b
      tc("M(a,b|a,b)", "2.1", "b < a-2",
         [](int a, int b, int) { return b < a - 2; },
         "a,b|a,b; b,a|a,b; a-1,b|a-1,b; b,a-1|a-1,b; a,b-1|a,b-1; b-1,a|a,b-1; "
         "a-1,b-1|a-1,b-1; b-1,a-1|a-1,b-1"),
      tc("M(a,b|a,b)", "2.2", "b = a-2",
         [](int a, int b, int) { return b == a - 2; },
         "a,a-2|a,a-2; a-2,a|a,a-2; a-1,a-2|a-1,a-2; a-2,a-1|a-1,a-2; a,a-3|a,a-3; "
         "a-3,a|a,a-3; a-1,a-3|a-1,a-3; a-3,a-1|a-1,a-3"),
      tc("M(a,b|a,b)", "2.3", "b = a-1",
         [](int a, int b, int) { return b == a - 1; },
         "a,a-1|a,a-1; a-1,a|a,a-1; a-1,a-2|a-2,a-1; a-1,a-1|a-1,a-1; a-1,a-2|a-1,a-2; "
         "a-2,a-1|a-1,a-2"),

      // series of M(b,a|b,a), a > b
      tc("M(b,a|b,a)", "1.1", "b < a-2",
         [](int a, int b, int) { return b < a - 2; },
         "b,a|b,a; b,a|a,b; b,a-1|b,a-1; b,a-1|a-1,b; b-1,a|b-1,a; b-1,a|a,b-1; "
         "a-1,b-1|a-1,b-1; b-1,a-1|a-1,b-1"),
      tc("M(b,a|b,a)", "1.2", "b = a-2",
         [](int a, int b, int) { return b == a - 2; },
         "a-2,a|a-2,a; a-2,a|a,a-2; a-2,a-1|a-2,a-1; a-2,a-1|a-1,a-2; a-3,a|a-3,a; "
         "a-3,a|a,a-3; a-3,a-1|a-3,a-1; a-3,a-1|a-1,a-3"),
      tc("M(b,a|b,a)", "1.3", "b = a-1",
         [](int a, int b, int) { return b == a - 1; },
         "a-1,a|a-1,a; a-1,a|a,a-1; a-1,a-2|a-2,a-1; a-1,a-1|a-1,a-1; a-2,a-1|a-2,a-1; "
         "a-2,a-1|a-1,a-2"),

      // series of M(b,a|a,b), a > b
      tc("M(b,a|a,b)", "2.1", "b < a-2",
         [](int a, int b, int) { return b < a - 2; },
         "b,a|a,b; b,a-1|a-1,b; b-1,a|a,b-1; b-1,a-1|a-1,b-1"),
      tc("M(b,a|a,b)", "2.2", "b = a-2",
         [](int a, int b, int) { return b == a - 2; },
         "a-2,a|a,a-2; a-3,a|a,a-3; a-3,a-1|a-1,a-3; a-2,a-1|a-1,a-2"),
      tc("M(b,a|a,b)", "2.3", "b = a-1",
         [](int a, int b, int) { return b == a - 1; },
         "a-1,a|a,a-1; a-1,a-1|a-1,a-1; a-2,a-1|a-1,a-2"),
  };
  return cs;
}

}  // namespace supero
