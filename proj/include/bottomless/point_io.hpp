#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bottomless/rational.hpp"

namespace bottomless {

// Line-oriented comma-separated files, UTF-8, `#` starts a comment line and
// blank lines are skipped.  Coordinates are exact decimal ("3.25") or
// rational ("13/4") literals; emission always uses the canonical reduced
// form, so write(read(write(x))) == write(x) byte for byte.

struct PointRecord {
  long long id;
  Rat x;
  Rat y;
};

// One colored point: `id,x,y,color`.
struct ColorRecord {
  long long id;
  Rat x;
  Rat y;
  int color;
};

// One horizontal segment: `id,x_lo,x_hi,y`.
struct SegmentRecord {
  long long id;
  Rat x_lo;
  Rat x_hi;
  Rat y;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Point lines are `id,x,y` or bare `x,y`; a bare line gets the running
// record index (0-based) as its id.
std::vector<PointRecord> read_points(std::istream& in);
std::vector<ColorRecord> read_colors(std::istream& in);
std::vector<SegmentRecord> read_segments(std::istream& in);

void write_points(std::ostream& out, const std::vector<PointRecord>& recs);
void write_colors(std::ostream& out, const std::vector<ColorRecord>& recs);
void write_segments(std::ostream& out, const std::vector<SegmentRecord>& recs);

}  // namespace bottomless
