#include "mctx/rational.hpp"

#include "mctx/errors.hpp"

namespace mctx {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

namespace {

boost::multiprecision::cpp_int parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) throw ParseError("bad rational '" + whole + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad rational '" + whole + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw ParseError("bad rational '" + whole + "'");
  return boost::multiprecision::cpp_int(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string frac = text.substr(dot + 1);
    auto whole = parse_int(text.substr(0, dot).empty() ? "0" : text.substr(0, dot), text);
    if (frac.empty()) return Rational(whole);
    auto f = parse_int(frac, text);
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    if (text[0] == '-') f = -f;
    return Rational(whole) + Rational(f, scale);
  }
  return Rational(parse_int(text, text));
}

}  // namespace mctx
