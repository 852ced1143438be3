// The instance text format: `monoid n` / optional `names` / Cayley rows,
// optional `group m` + rows + `action` + rows. '#' comments, blank-tolerant.

#pragma once

#include <stdexcept>
#include <string>

#include "gmon/action.hpp"

namespace gmon {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

// Accepts table entries by name or by index. If the declared identity sits at
// another position the elements are reordered so it lands at index 0.
GammaStructure parse_instance(const std::string& text);

// Canonical rendering: parse(print(x)) == x and print∘parse is idempotent.
std::string print_instance(const GammaStructure& gs);

}  // namespace gmon
