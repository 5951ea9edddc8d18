#include "trig5/ff.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace trig5::ff {
namespace {

using Poly = std::vector<std::uint8_t>;  // ascending coeffs over F_p

int deg(const Poly& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

void trim(Poly& f) { f.resize(deg(f) + 1); }

Poly pmul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + a[i] * b[j]) % p;
  }
  Poly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

// f mod g, g monic
Poly pmod(Poly f, const Poly& g, std::uint32_t p) {
  int dg = deg(g);
  for (int i = deg(f); i >= dg; --i) {
    std::uint32_t c = f[i];
    if (!c) continue;
    for (int j = 0; j <= dg; ++j)
      f[i - dg + j] = (std::uint8_t)((f[i - dg + j] + (p - c % p) * g[j]) % p);
  }
  trim(f);
  return f;
}

Poly pgcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (deg(b) >= 0) {
    // make b monic before reduction
    std::uint32_t lc = b[deg(b)], inv = 1;
    for (std::uint32_t k = 1; k < p; ++k)
      if (k * lc % p == 1) inv = k;
    for (auto& c : b) c = (std::uint8_t)(c * inv % p);
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmod(pmul(r, base, p), f, p);
    base = pmod(pmul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

// monic f of degree m >= 1 over F_p
bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::uint32_t m = deg(f);
  if (m == 0) return false;
  Poly x{0, 1};
  // t_j = x^(p^j) mod f by iterated p-th powers
  std::vector<Poly> t(m + 1);
  t[0] = pmod(x, f, p);
  for (std::uint32_t j = 1; j <= m; ++j) t[j] = ppowmod(t[j - 1], p, f, p);
  if (t[m] != t[0]) return false;
  for (std::uint64_t l : prime_factors(m)) {
    Poly d = t[m / l];
    // d - x
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (std::uint8_t)((d[1] + p - 1) % p);
    trim(d);
    if (deg(pgcd(d, f, p)) != 0) return false;
  }
  return true;
}

Poly digits_of(std::uint64_t idx, std::uint32_t p, std::uint32_t len) {
  Poly d(len, 0);
  for (std::uint32_t i = 0; i < len && idx; ++i) {
    d[i] = (std::uint8_t)(idx % p);
    idx /= p;
  }
  return d;
}

std::uint64_t index_of(const Poly& d, std::uint32_t p, std::uint32_t len) {
  std::uint64_t idx = 0, pw = 1;
  for (std::uint32_t i = 0; i < len; ++i) {
    if (i < d.size()) idx += pw * d[i];
    pw *= p;
  }
  return idx;
}

}  // namespace

const std::uint16_t* add3_block_table() {
  static std::vector<std::uint16_t> tab = [] {
    std::vector<std::uint16_t> t(243 * 243);
    for (std::uint32_t a = 0; a < 243; ++a)
      for (std::uint32_t b = 0; b < 243; ++b) {
        std::uint32_t r = 0, pw = 1, x = a, y = b;
        for (int i = 0; i < 5; ++i) {
          r += pw * ((x % 3 + y % 3) % 3);
          x /= 3;
          y /= 3;
          pw *= 3;
        }
        t[a * 243 + b] = (std::uint16_t)r;
      }
    return t;
  }();
  return tab.data();
}

Field Field::make(std::uint32_t p, std::uint32_t s, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("ff: p must be prime");
  if (s == 0 || m == 0 || m % s != 0) throw std::invalid_argument("ff: need s | m");
  std::uint64_t idx = 0, limit = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (limit > (1ull << 40) / p) throw std::invalid_argument("ff: p^m > 2^40");
    limit *= p;
  }
  for (; idx < limit; ++idx) {
    Poly f = digits_of(idx, p, m);
    f.resize(m + 1, 0);
    f[m] = 1;
    if (is_irreducible(f, p)) return make_with_modulus(p, s, Poly(f));
  }
  throw std::logic_error("ff: no irreducible found");  // unreachable
}

Field Field::make_with_modulus(std::uint32_t p, std::uint32_t s,
                               std::vector<std::uint8_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("ff: p must be prime");
  if (modulus.empty() || modulus.back() != 1)
    throw std::invalid_argument("ff: modulus must be monic");
  std::uint32_t m = (std::uint32_t)modulus.size() - 1;
  if (s == 0 || m == 0 || m % s != 0) throw std::invalid_argument("ff: need s | m");
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("ff: modulus coeff out of range");
  if (!is_irreducible(modulus, p)) throw std::invalid_argument("ff: modulus reducible");
  Field F;
  F.d_ = FieldDesc{p, s, m, std::move(modulus)};
  F.init();
  return F;
}

void Field::init() {
  order_ = 1;
  for (std::uint32_t i = 0; i < d_.m; ++i) {
    if (order_ > (1ull << 40) / d_.p) throw std::invalid_argument("ff: p^m > 2^40");
    order_ *= d_.p;
  }
  base_ = 1;
  for (std::uint32_t i = 0; i < d_.s; ++i) base_ *= d_.p;
  if (d_.m == 1)
    theta_ = (d_.p - d_.modulus[0]) % d_.p;
  else
    theta_ = d_.p;

  if (order_ <= (1u << 16)) {
    // discrete log tables on a generator of the unit group
    std::uint64_t n = order_ - 1;
    auto fac = prime_factors(n);
    Elem g = 0;
    for (Elem cand = 1; cand < order_; ++cand) {
      bool ok = cand > 1 || order_ == 2;
      for (auto l : fac)
        if (pow(cand, n / l) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        g = cand;
        break;
      }
    }
    log_.assign(order_, 0);
    alog_.assign(n, 0);
    Elem cur = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
      alog_[k] = (std::uint16_t)cur;
      log_[cur] = (std::uint16_t)k;
      cur = mul_generic_(cur, g);
    }
    frob_.assign(order_, 0);
    for (Elem a = 1; a < order_; ++a)
      frob_[a] = alog_[(std::uint64_t)log_[a] * base_ % n];
  }
}

Elem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() > d_.m) throw std::invalid_argument("ff: too many coeffs");
  Elem idx = 0, pw = 1;
  for (std::uint32_t i = 0; i < d_.m; ++i) {
    std::uint32_t v = i < c.size() ? c[i] : 0;
    if (v >= d_.p) throw std::invalid_argument("ff: coeff out of range");
    idx += pw * v;
    pw *= d_.p;
  }
  return idx;
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(d_.m);
  for (std::uint32_t i = 0; i < d_.m; ++i) {
    c[i] = (std::uint32_t)(a % d_.p);
    a /= d_.p;
  }
  return c;
}

Elem Field::add(Elem a, Elem b) const {
  if (d_.p == 2) return a ^ b;
  if (d_.p == 3) return add3(a, b, add3_block_table());
  Elem r = 0, pw = 1;
  while (a | b) {
    r += pw * ((a % d_.p + b % d_.p) % d_.p);
    a /= d_.p;
    b /= d_.p;
    pw *= d_.p;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (d_.p == 2) return a;
  Elem r = 0, pw = 1;
  while (a) {
    r += pw * ((d_.p - a % d_.p) % d_.p);
    a /= d_.p;
    pw *= d_.p;
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::scalar_mul(std::uint32_t k, Elem a) const {
  k %= d_.p;
  Elem r = 0, pw = 1;
  while (a) {
    r += pw * (a % d_.p * k % d_.p);
    a /= d_.p;
    pw *= d_.p;
  }
  return r;
}

Elem Field::mul_generic_(Elem a, Elem b) const {
  Poly pa = digits_of(a, d_.p, d_.m), pb = digits_of(b, d_.p, d_.m);
  return index_of(pmod(pmul(pa, pb, d_.p), d_.modulus, d_.p), d_.p, d_.m);
}

Elem Field::mul(Elem a, Elem b) const {
  if (!a || !b) return 0;
  if (!log_.empty()) {
    std::uint64_t n = order_ - 1;
    std::uint64_t k = (std::uint64_t)log_[a] + log_[b];
    if (k >= n) k -= n;
    return alog_[k];
  }
  return mul_generic_(a, b);
}

Elem Field::inv(Elem a) const {
  if (!a) throw std::domain_error("ff: inverse of zero");
  if (!log_.empty()) {
    std::uint64_t n = order_ - 1;
    return alog_[(n - log_[a]) % n];
  }
  return pow(a, order_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::frobenius(Elem a) const {
  if (!frob_.empty()) return frob_[a];
  return pow(a, base_);
}

Elem Field::frobenius_iter(Elem a, std::uint32_t k) const {
  for (std::uint32_t i = 0; i < k; ++i) a = frobenius(a);
  return a;
}

bool Field::in_base_field(Elem a) const { return frobenius(a) == a; }

QuadraticData quadratic_data(const Field& k2) {
  if (k2.m() != 2 * k2.s())
    throw std::invalid_argument("ff: quadratic_data needs m = 2s");
  QuadraticData qd;
  qd.alpha = k2.theta();
  Elem conj = k2.frobenius(qd.alpha);
  if (conj == qd.alpha) throw std::logic_error("ff: theta not degree 2");
  qd.t = k2.add(qd.alpha, conj);
  qd.n = k2.mul(qd.alpha, conj);
  if (!k2.in_base_field(qd.t) || !k2.in_base_field(qd.n))
    throw std::logic_error("ff: trace/norm not in base field");
  if (k2.s() == 1) {
    // base-field constants coincide with small indices
    qd.t_base = (std::uint32_t)qd.t;
    qd.n_base = (std::uint32_t)qd.n;
    // irreducibility of x^2 - t x + n over F_p: no root among 0..p-1
    for (Elem r = 0; r < k2.p(); ++r) {
      Elem v = k2.add(k2.sub(k2.mul(r, r), k2.mul(qd.t, r)), qd.n);
      if (v == 0) throw std::logic_error("ff: quadratic splits over base");
    }
  } else {
    qd.t_base = qd.n_base = 0;  // not represented for s > 1
  }
  return qd;
}

}  // namespace trig5::ff
