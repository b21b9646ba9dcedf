#pragma once

#include <stdexcept>
#include <string>

#include "tvb/search.hpp"

namespace tvb {

// Parse failure with a 1-based line number; line 0 means the error is not
// tied to a specific line.
class ParseError : public std::runtime_error {
  public:
    int line;
    ParseError(const std::string& format, int lineno, const std::string& msg);
};

// "tvb1" instance format. Header lines tvb1, d, r, m, caps, points in that
// order; a body of one line per point, or "points 0" followed by a
// colorsizes line for coordinate-free instances. '#' starts a comment.
Instance parse_instance(const std::string& text);
std::string render_instance(const Instance& inst);

// "part1" partition format: "part1 <r>", r lines of ascending vertex ids,
// then an optional "witness <x_1> ... <x_d>" line.
RainbowPartition parse_partition(const std::string& text);
std::string render_partition(const RainbowPartition& part);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Instance read_instance_file(const std::string& path);
RainbowPartition read_partition_file(const std::string& path);

}  // namespace tvb
