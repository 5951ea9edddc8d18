#pragma once
// Exact Laurent polynomials in a formal variable q with rational
// coefficients.  All identities in the pipeline are checked at this level
// before any numeric substitution.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace trig5::symbolic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class QPoly {
 public:
  QPoly() = default;
  static QPoly constant(const Rat& c);
  static QPoly q_pow(std::int64_t e, const Rat& coef = 1);

  bool is_zero() const { return c_.empty(); }
  std::int64_t degree() const;      // max exponent, -1 on zero
  std::int64_t low_degree() const;  // min exponent, 0 on zero
  Rat coeff(std::int64_t e) const;
  bool integer_coeffs() const;

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  // exact polynomial division; throws std::domain_error on any remainder
  QPoly exact_div(const QPoly& d) const;

  Rat eval(const Rat& q) const;
  Int eval_int(const Int& q) const;  // throws if the value is not an integer

  // ascending (exponent, numerator, denominator)
  std::vector<std::tuple<std::int64_t, Int, Int>> triples() const;
  static QPoly from_triples(
      const std::vector<std::tuple<std::int64_t, Int, Int>>& t);

  std::string to_string() const;  // descending, e.g. "q^11 + q^10 - q^8 + 1"

 private:
  std::map<std::int64_t, Rat> c_;  // exponent -> nonzero coefficient
  void put(std::int64_t e, const Rat& v);
};

}  // namespace trig5::symbolic
