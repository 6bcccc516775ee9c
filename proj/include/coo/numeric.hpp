#ifndef COO_NUMERIC_HPP
#define COO_NUMERIC_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coo {

// Exact arithmetic everywhere counts or probabilities are exact; no
// floating point enters a counting path.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Catalan number C_m.
BigInt catalan(int m);

// C_0 .. C_m_max.
std::vector<BigInt> catalan_table(int m_max);

// Fixed-point decimal rendering of an exact rational, round half up,
// '.' decimal point, no locale dependence.
std::string decimal_string(const BigRational& q, int digits);

// "13/14" (or "1" when the denominator is one).
std::string rational_string(const BigRational& q);

double to_double(const BigRational& q);

}  // namespace coo

#endif  // COO_NUMERIC_HPP
