#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace mctx {

using Rational = boost::multiprecision::cpp_rational;

// Always "p/q", including integers ("1/1").
std::string to_string(const Rational& r);

// Accepts "p/q", "p", or a plain non-negative decimal like "0.25".
Rational parse_rational(const std::string& text);

}  // namespace mctx
