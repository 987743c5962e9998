#pragma once

#include <iosfwd>
#include <string>

#include "biharm/problem.hpp"

namespace biharm::io {

/// Reads a problem specification from a file.  Files ending in ".json" use
/// the JSON layout; everything else uses the line-oriented layout.  Both are
/// described in docs/problem-format.md.  Throws ParseError on syntax or
/// limit violations and DomainError when the file cannot be opened.
ProblemSpec load_problem(const std::string& path);

/// Line-oriented layout:
///   fstar  <n> <re> <im>
///   phi    <n> <re> <im>
///   g      <j> <k> <re> <im>
///   g      constant <value>
/// with '#' comments and blank lines ignored.
ProblemSpec parse_problem_text(std::istream& in);

/// JSON layout: {"fstar": [[n,re,im],...], "phi": [...],
///               "g": [[j,k,re,im],...] | {"constant": value}}
ProblemSpec parse_problem_json(std::istream& in);

}  // namespace biharm::io
