#include "bottomless/point_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace bottomless {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool skip_line(const std::string& line) {
  std::string t = trim(line);
  return t.empty() || t[0] == '#';
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(trim(line.substr(start)));
      return out;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

long long parse_id(const std::string& tok, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "bad id '" + tok + "'");
  return v;
}

int parse_color(const std::string& tok, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v < 0)
    throw ParseError(line, "bad color '" + tok + "'");
  return v;
}

Rat parse_coord(const std::string& tok, int line) {
  auto r = parse_rational(tok);
  if (!r) throw ParseError(line, "bad coordinate '" + tok + "'");
  return *r;
}

template <typename Fn>
void for_each_record(std::istream& in, Fn fn) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    fn(split_fields(line), lineno);
  }
}

}  // namespace

std::vector<PointRecord> read_points(std::istream& in) {
  std::vector<PointRecord> out;
  for_each_record(in, [&](const std::vector<std::string>& f, int line) {
    if (f.size() == 2) {
      out.push_back({static_cast<long long>(out.size()),
                     parse_coord(f[0], line), parse_coord(f[1], line)});
    } else if (f.size() == 3) {
      out.push_back({parse_id(f[0], line), parse_coord(f[1], line),
                     parse_coord(f[2], line)});
    } else {
      throw ParseError(line, "expected id,x,y or x,y");
    }
  });
  return out;
}

std::vector<ColorRecord> read_colors(std::istream& in) {
  std::vector<ColorRecord> out;
  for_each_record(in, [&](const std::vector<std::string>& f, int line) {
    if (f.size() != 4) throw ParseError(line, "expected id,x,y,color");
    out.push_back({parse_id(f[0], line), parse_coord(f[1], line),
                   parse_coord(f[2], line), parse_color(f[3], line)});
  });
  return out;
}

std::vector<SegmentRecord> read_segments(std::istream& in) {
  std::vector<SegmentRecord> out;
  for_each_record(in, [&](const std::vector<std::string>& f, int line) {
    if (f.size() != 4) throw ParseError(line, "expected id,x_lo,x_hi,y");
    out.push_back({parse_id(f[0], line), parse_coord(f[1], line),
                   parse_coord(f[2], line), parse_coord(f[3], line)});
  });
  return out;
}

void write_points(std::ostream& out, const std::vector<PointRecord>& recs) {
  for (const auto& r : recs)
    out << r.id << ',' << format_rational(r.x) << ',' << format_rational(r.y)
        << '\n';
}

void write_colors(std::ostream& out, const std::vector<ColorRecord>& recs) {
  for (const auto& r : recs)
    out << r.id << ',' << format_rational(r.x) << ',' << format_rational(r.y)
        << ',' << r.color << '\n';
}

void write_segments(std::ostream& out, const std::vector<SegmentRecord>& recs) {
  for (const auto& r : recs)
    out << r.id << ',' << format_rational(r.x_lo) << ','
        << format_rational(r.x_hi) << ',' << format_rational(r.y) << '\n';
}

}  // namespace bottomless
