#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "qha/presentation.hpp"

namespace qha {

// A parsed presentation file, with the optional new-arrow tags and
// new-arrow -> relation-index correspondences used by B-role files.
struct PresentationFile {
  Presentation presentation;
  std::set<std::string> new_arrows;
  std::map<std::string, std::size_t> correspondences;
};

struct ParseError : std::runtime_error {
  std::size_t line;
  std::size_t col;
  ParseError(std::size_t line_, std::size_t col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// Grammar (line-oriented, '#' comments):
//   vertex NAME
//   arrow NAME SRC TGT [new]
//   rel TERM ((+|-) TERM)*
//   corresponds NEWARROW INT
//   TERM := [RATIONAL '*'] NAME ('.' NAME)*   RATIONAL := INT['/'POSINT]
PresentationFile parse_presentation(const std::string& text);

std::string emit_presentation(const PresentationFile& f);

}  // namespace qha
