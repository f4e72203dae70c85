#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace selfloop {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace selfloop
