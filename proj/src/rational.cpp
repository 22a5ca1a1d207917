#include "bottomless/rational.hpp"

#include <cctype>
#include <cstddef>

namespace bottomless {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.erase(body.begin());
  }
  if (body.empty()) return std::nullopt;

  Rat value;
  std::size_t slash = body.find('/');
  std::size_t dot = body.find('.');
  if (slash != std::string::npos) {
    if (dot != std::string::npos) return std::nullopt;
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt d(den);
    if (d == 0) return std::nullopt;
    value = Rat(BigInt(num), d);
  } else if (dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = whole.empty() ? BigInt(0) : BigInt(whole);
    num *= scale;
    if (!frac.empty()) num += BigInt(frac);
    value = Rat(num, scale);
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = Rat(BigInt(body));
  }
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rat& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

long long floor_div(long long num, long long den) {
  long long q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace bottomless
