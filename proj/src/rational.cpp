#include "ncalg/rational.hpp"

namespace ncalg {

std::string to_string(const Integer& z) { return z.str(); }

bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace ncalg
