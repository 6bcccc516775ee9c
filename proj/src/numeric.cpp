#include "coo/numeric.hpp"

#include <stdexcept>

namespace coo {

BigInt catalan(int m) {
  if (m < 0) throw std::invalid_argument("catalan: negative index");
  BigInt c = 1;
  for (int k = 1; k <= m; ++k) {
    c = c * 2 * (2 * k - 1) / (k + 1);  // exact: C_k = C_{k-1} * 2(2k-1)/(k+1)
  }
  return c;
}

std::vector<BigInt> catalan_table(int m_max) {
  if (m_max < 0) throw std::invalid_argument("catalan_table: negative index");
  std::vector<BigInt> table(static_cast<std::size_t>(m_max) + 1);
  table[0] = 1;
  for (int k = 1; k <= m_max; ++k) {
    table[k] = table[k - 1] * 2 * (2 * k - 1) / (k + 1);
  }
  return table;
}

std::string decimal_string(const BigRational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("decimal_string: negative digit count");
  const bool negative = q < 0;
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (negative) num = -num;

  BigInt scale = 1;
  for (int d = 0; d < digits; ++d) scale *= 10;
  BigInt scaled = num * scale;
  BigInt quot = scaled / den;
  const BigInt rem = scaled % den;
  if (2 * rem >= den) ++quot;  // round half up

  std::string body = quot.str();
  std::string result;
  if (digits == 0) {
    result = body;
  } else {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    result = body.substr(0, body.size() - digits) + "." +
             body.substr(body.size() - digits);
  }
  return negative ? "-" + result : result;
}

std::string rational_string(const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const BigRational& q) { return q.convert_to<double>(); }

}  // namespace coo
