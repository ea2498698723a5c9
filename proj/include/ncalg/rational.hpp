#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncalg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

bool is_integer(const Rational& r);

}  // namespace ncalg
