#include "trig5/qpoly.hpp"

#include <stdexcept>

namespace trig5::symbolic {

void QPoly::put(std::int64_t e, const Rat& v) {
  if (v == 0)
    c_.erase(e);
  else
    c_[e] = v;
}

QPoly QPoly::constant(const Rat& c) {
  QPoly p;
  p.put(0, c);
  return p;
}

QPoly QPoly::q_pow(std::int64_t e, const Rat& coef) {
  QPoly p;
  p.put(e, coef);
  return p;
}

std::int64_t QPoly::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
std::int64_t QPoly::low_degree() const { return c_.empty() ? 0 : c_.begin()->first; }

Rat QPoly::coeff(std::int64_t e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rat(0) : it->second;
}

bool QPoly::integer_coeffs() const {
  for (auto& [e, v] : c_)
    if (denominator(v) != 1) return false;
  return true;
}

QPoly QPoly::operator-() const {
  QPoly r;
  for (auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  for (auto& [e, v] : o.c_) r.put(e, r.coeff(e) + v);
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r;
  for (auto& [e1, v1] : c_)
    for (auto& [e2, v2] : o.c_) r.put(e1 + e2, r.coeff(e1 + e2) + v1 * v2);
  return r;
}

QPoly QPoly::exact_div(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("qpoly: division by zero");
  if (is_zero()) return {};
  // factor out the lowest powers so ordinary long division terminates,
  // then shift back (the quotient may be Laurent)
  std::int64_t shift = low_degree() - d.low_degree();
  QPoly rem = *this * q_pow(-low_degree());
  QPoly div = d * q_pow(-d.low_degree());
  QPoly quot;
  while (!rem.is_zero() && rem.degree() >= div.degree()) {
    QPoly t = q_pow(rem.degree() - div.degree(),
                    rem.coeff(rem.degree()) / div.coeff(div.degree()));
    quot += t;
    rem -= t * div;
  }
  if (!rem.is_zero()) throw std::domain_error("qpoly: inexact division");
  return quot * q_pow(shift);
}

Rat QPoly::eval(const Rat& q) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (it->first < 0) {
      if (q == 0) throw std::domain_error("qpoly: negative exponent at 0");
      Rat qp = 1;
      for (std::int64_t i = 0; i < -it->first; ++i) qp *= q;
      r += it->second / qp;
      continue;
    }
    Rat qp = 1;
    for (std::int64_t i = 0; i < it->first; ++i) qp *= q;
    r += it->second * qp;
  }
  return r;
}

Int QPoly::eval_int(const Int& q) const {
  Rat v = eval(Rat(q));
  if (denominator(v) != 1) throw std::domain_error("qpoly: non-integral value");
  return numerator(v);
}

std::vector<std::tuple<std::int64_t, Int, Int>> QPoly::triples() const {
  std::vector<std::tuple<std::int64_t, Int, Int>> t;
  for (auto& [e, v] : c_) t.emplace_back(e, numerator(v), denominator(v));
  return t;
}

QPoly QPoly::from_triples(const std::vector<std::tuple<std::int64_t, Int, Int>>& t) {
  QPoly p;
  for (auto& [e, num, den] : t) {
    if (den == 0) throw std::domain_error("qpoly: zero denominator");
    p.put(e, p.coeff(e) + Rat(num, den));
  }
  return p;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rat v = it->second;
    bool neg = v < 0;
    if (neg) v = -v;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string coef;
    if (denominator(v) != 1)
      coef = "(" + numerator(v).str() + "/" + denominator(v).str() + ")";
    else if (numerator(v) != 1 || it->first == 0)
      coef = numerator(v).str();
    std::string mono;
    if (it->first == 1)
      mono = "q";
    else if (it->first != 0)
      mono = "q^" + std::to_string(it->first);
    if (!coef.empty() && !mono.empty())
      s += coef + "*" + mono;
    else
      s += coef + mono;
  }
  return s;
}

}  // namespace trig5::symbolic
