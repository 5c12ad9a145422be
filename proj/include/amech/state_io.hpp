#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "amech/apparatus.hpp"
#include "amech/dynamics.hpp"

namespace amech {

/// Configuration file problems, each naming the offending line.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { kMalformed, kOutOfRange, kDuplicateLabel, kNonPrime };

  ParseError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  /// 1-based line number in the input text.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Configuration text format:
///
///   p=19
///   # comment
///   <label> <x> <y> <vx> <vy>
///
/// The header is the first line. After it, blank lines and lines starting
/// with '#' are skipped; every other line is five integers separated by
/// single spaces. Particles keep file order.
Configuration parse_config(std::string_view text);
std::string serialize_config(const Configuration& c);

/// p lines of p characters, row = y (top row 0), column = x. An empty cell
/// is '.', a cell with k particles is the character '0' + k.
/// Throws std::range_error if a cell holds more particles than a printable
/// character can show.
std::string render_board(const Configuration& c);

struct EntropySample {
  std::int64_t step = 0;
  EntropyBits entropy;
};

/// "step,entropy_bits" header plus one row per sample. Steps must be
/// strictly increasing (std::invalid_argument otherwise).
std::string emit_entropy_csv(const std::vector<EntropySample>& series);

/// Block counts as text: one line per block row (by), grid_dim integers per
/// line. Within a line entries may be separated by spaces, tabs or commas;
/// ';' also ends a row so a whole grid fits on a command line.
BlockCounts parse_block_counts(std::string_view text, const Apparatus& a);
std::string format_block_counts(const BlockCounts& m);

}  // namespace amech
