#pragma once

#include <string>

#include "skewbrace/brace.hpp"
#include "skewbrace/bword.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/perm_brace.hpp"
#include "skewbrace/solution.hpp"

namespace skewbrace {

// Text formats. Serializers emit canonical bytes (single spaces, trailing
// newline); parse(serialize(x)) reproduces x and re-serializing reproduces
// the bytes. Parsers throw FormatError with 1-based line numbers.

// solution <n>
// i j -> k l        (n^2 lines, lexicographic by (i,j))
std::string serialize_solution(const SolutionTable& sol);
SolutionTable parse_solution(const std::string& text);

// brace <n>
// add
// <n rows of n entries>
// mul
// <n rows>
std::string serialize_brace(const FiniteSkewBrace& b);
FiniteSkewBrace parse_brace(const std::string& text);

// presentation
// gens <name> ...
// <one relator b-word per line>
std::string serialize_presentation(const SkewBracePresentation& p);
SkewBracePresentation parse_presentation(const std::string& text);

// catalog <n> <count> <method>
// <brace files separated by one blank line>
std::string serialize_catalog(const BraceCatalog& c);
BraceCatalog parse_catalog(const std::string& text);

// <brace file>
// labels <x-size>
// e : <first images> | <second images>     (one line per element)
// gens <element index of g_x for each x>
std::string serialize_perm_brace(const PermBraceResult& r);
// Validates labels against the tables and regrows the additive certificates.
PermBraceResult parse_perm_brace(const std::string& text);

}  // namespace skewbrace
