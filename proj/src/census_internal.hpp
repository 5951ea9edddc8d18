#pragma once
// Internals shared by the census translation units: flat scan tables, the
// evaluation/interpolation tables for resultants, and a polynomial toolkit
// (gcd / radical / distinct-degree factorization) generic over the
// coefficient field so the same code runs over F_p and over F_p[x]/(u).

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "trig5/census.hpp"
#include "trig5/ff.hpp"
#include "trig5/plane.hpp"

namespace trig5::census {

// --- SCAN tables --------------------------------------------------------
// One entry per orbit representative: functional values of the 21 monomials
// under the 4 singularity conditions (value, three partials), pre-scaled by
// the two possible nonzero coefficients.  All values live in F_{q^d} with
// q^d <= 3^9 < 2^16; the fixed family part rides in through coef[] like any
// other monomial, so the tables are family-agnostic.
struct ScanRep {
  std::uint16_t tab[4][21][2];  // [condition][monomial][coef - 1]
};

// --- deterministic RNG ---------------------------------------------------
// Equal-degree splitting needs random elements; the stream is seeded from
// the curve so runs are reproducible regardless of threading.
struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

// --- coefficient ops ------------------------------------------------------

// F_p, p prime (2 or 3 here, but nothing below depends on that).
struct BaseOps {
  using C = std::uint8_t;
  std::uint32_t p;
  std::uint32_t chr() const { return p; }
  std::uint64_t card() const { return p; }
  C zero() const { return 0; }
  C one() const { return 1; }
  bool is_zero(C a) const { return a == 0; }
  C add(C a, C b) const { return (C)((a + (std::uint32_t)b) % p); }
  C sub(C a, C b) const { return (C)((a + p - (std::uint32_t)b) % p); }
  C neg(C a) const { return (C)((p - (std::uint32_t)a) % p); }
  C mul(C a, C b) const { return (C)(a * (std::uint32_t)b % p); }
  C inv(C a) const {
    if (!a) throw std::domain_error("census: inverse of zero");
    C r = 1, x = a;
    for (std::uint32_t e = p - 2; e; e >>= 1, x = mul(x, x))
      if (e & 1) r = mul(r, x);
    return r;
  }
  C from_uint(std::uint32_t k) const { return (C)(k % p); }
  // p-th root; the Frobenius is the identity on F_p.
  C proot(C a) const { return a; }
};

template <class Ops>
using PolyOf = std::vector<typename Ops::C>;

// Dense univariate polynomials, ascending coefficients, trimmed invariant:
// back() is nonzero, zero polynomial is the empty vector.
template <class Ops>
struct PolyAlg {
  using C = typename Ops::C;
  using P = std::vector<C>;
  Ops k;

  static int deg(const P& a) { return (int)a.size() - 1; }
  bool is_zero(const P& a) const { return a.empty(); }
  bool is_const(const P& a) const { return a.size() <= 1; }
  void trim(P& a) const {
    while (!a.empty() && k.is_zero(a.back())) a.pop_back();
  }
  P constant(C c) const { return k.is_zero(c) ? P{} : P{c}; }
  P x() const { return P{k.zero(), k.one()}; }

  P add(const P& a, const P& b) const {
    P r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
    trim(r);
    return r;
  }
  P sub(const P& a, const P& b) const {
    P r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
    trim(r);
    return r;
  }
  P mul(const P& a, const P& b) const {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    trim(r);
    return r;
  }
  P scale(C c, const P& a) const {
    if (k.is_zero(c)) return {};
    P r(a);
    for (auto& e : r) e = k.mul(c, e);
    trim(r);
    return r;
  }
  // a = q*b + r with deg r < deg b; b nonzero.
  void divmod(const P& a, const P& b, P& q, P& r) const {
    if (b.empty()) throw std::domain_error("census: polynomial division by zero");
    r = a;
    q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, k.zero());
    C ilc = k.inv(b.back());
    while ((int)r.size() >= (int)b.size()) {
      C c = k.mul(r.back(), ilc);
      std::size_t shift = r.size() - b.size();
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i)
        r[shift + i] = k.sub(r[shift + i], k.mul(c, b[i]));
      trim(r);  // kills at least the leading term, so the loop terminates
    }
    trim(q);
  }
  P mod(const P& a, const P& b) const {
    P q, r;
    divmod(a, b, q, r);
    return r;
  }
  P quot(const P& a, const P& b) const {
    P q, r;
    divmod(a, b, q, r);
    if (!r.empty()) throw std::logic_error("census: inexact polynomial division");
    return q;
  }
  P monic(P a) const {
    if (a.empty() || k.is_zero(k.sub(a.back(), k.one()))) return a;
    C ilc = k.inv(a.back());
    for (auto& e : a) e = k.mul(ilc, e);
    return a;
  }
  P powmod(P b, std::uint64_t e, const P& f) const {
    P r = mod(constant(k.one()), f);
    b = mod(std::move(b), f);
    while (e) {
      if (e & 1) r = mod(mul(r, b), f);
      b = mod(mul(b, b), f);
      e >>= 1;
    }
    return r;
  }
  P gcd(P a, P b) const {
    while (!b.empty()) {
      P r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }
  P deriv(const P& a) const {
    P r;
    for (std::size_t i = 1; i < a.size(); ++i)
      r.push_back(k.mul(k.from_uint((std::uint32_t)(i % k.chr())), a[i]));
    trim(r);
    return r;
  }
  C eval(const P& a, C v) const {
    C r = k.zero();
    for (std::size_t i = a.size(); i-- > 0;) r = k.add(k.mul(r, v), a[i]);
    return r;
  }
  // a with zero derivative is b(x^p); return b (coefficients get p-th roots).
  P pth_root(const P& a) const {
    P r;
    for (std::size_t i = 0; i < a.size(); i += k.chr()) r.push_back(k.proot(a[i]));
    trim(r);
    return r;
  }
  // Product of the distinct irreducible factors (monic).
  P radical(P f) const {
    P out = constant(k.one());
    f = monic(std::move(f));
    while (deg(f) > 0) {
      P fp = deriv(f);
      if (fp.empty()) {
        f = pth_root(f);
        continue;
      }
      P g = gcd(f, fp);
      P s = quot(f, g);  // squarefree, multiplicity not divisible by p
      out = mul(out, quot(s, gcd(out, s)));
      f = std::move(g);
    }
    return out;
  }
  // h -> h^|k| mod f, by chr()-th powers (cheap for chr 2, 3).
  P pow_card_mod(P h, const P& f) const {
    std::uint64_t c = k.card();
    std::uint32_t p = k.chr();
    std::uint32_t steps = 0;
    for (std::uint64_t t = c; t > 1; t /= p) ++steps;
    for (std::uint32_t s = 0; s < steps; ++s) {
      P acc = h;
      for (std::uint32_t i = 1; i < p; ++i) acc = mod(mul(acc, h), f);
      h = std::move(acc);
    }
    return h;
  }
  // Distinct-degree factorization of a monic squarefree f: pairs
  // (d, product of the irreducible factors of degree d), ascending d.
  std::vector<std::pair<std::uint32_t, P>> ddf(P f) const {
    std::vector<std::pair<std::uint32_t, P>> out;
    if (deg(f) <= 0) return out;
    P h = mod(x(), f);
    std::uint32_t d = 0;
    while ((int)(2 * (d + 1)) <= deg(f)) {
      ++d;
      h = pow_card_mod(std::move(h), f);
      P g = gcd(f, sub(h, x()));
      if (deg(g) > 0) {
        out.emplace_back(d, g);
        f = quot(f, g);
        h = mod(std::move(h), f);
      }
    }
    if (deg(f) > 0) out.emplace_back((std::uint32_t)deg(f), std::move(f));
    return out;
  }
};

// F_p[x]/(u) with u monic irreducible; elements are trimmed base polys.
struct ExtOps {
  using C = std::vector<std::uint8_t>;
  PolyAlg<BaseOps> base;
  C u;
  std::uint32_t e;

  ExtOps(std::uint32_t p, C mod_poly)
      : base{BaseOps{p}}, u(std::move(mod_poly)), e((std::uint32_t)(u.size() - 1)) {}

  std::uint32_t chr() const { return base.k.p; }
  std::uint64_t card() const {
    std::uint64_t c = 1;
    for (std::uint32_t i = 0; i < e; ++i) c *= base.k.p;
    return c;
  }
  C zero() const { return {}; }
  C one() const { return {1}; }
  bool is_zero(const C& a) const { return a.empty(); }
  C add(const C& a, const C& b) const { return base.add(a, b); }
  C sub(const C& a, const C& b) const { return base.sub(a, b); }
  C neg(const C& a) const { return base.sub({}, a); }
  C mul(const C& a, const C& b) const { return base.mod(base.mul(a, b), u); }
  C pow(C a, std::uint64_t n) const {
    C r = one();
    while (n) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }
  C inv(const C& a) const {
    if (a.empty()) throw std::domain_error("census: inverse of zero in extension");
    // extended Euclid in F_p[x]
    C r0 = u, r1 = a, s0 = {}, s1 = {1};
    while (!r1.empty()) {
      C q, r;
      base.divmod(r0, r1, q, r);
      C s = base.sub(s0, base.mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (PolyAlg<BaseOps>::deg(r0) != 0)
      throw std::logic_error("census: extension modulus not irreducible");
    return base.scale(base.k.inv(r0[0]), s0);
  }
  C from_uint(std::uint32_t k) const {
    std::uint8_t v = (std::uint8_t)(k % base.k.p);
    return v ? C{v} : C{};
  }
  C proot(const C& a) const {
    // c^(1/p) = c^(p^(e-1)) in F_{p^e}
    std::uint64_t n = 1;
    for (std::uint32_t i = 1; i < e; ++i) n *= base.k.p;
    return pow(a, n);
  }
};

using BasePoly = PolyOf<BaseOps>;  // F_p[x]
using ExtPoly = PolyOf<ExtOps>;    // (F_p[x]/u)[y]

// Equal-degree splitting of a monic squarefree product of irreducibles of
// one known degree d over F_p (Cantor-Zassenhaus; trace map for p = 2).
std::vector<BasePoly> edf(const PolyAlg<BaseOps>& A, BasePoly f, std::uint32_t d,
                          SplitMix64& rng);

// --- bivariate helpers (F_p[x][y], y-coefficient vectors) ----------------
// These carry the slow paths and the reducedness oracle; trimmed in y.
using BivPoly = std::vector<BasePoly>;

struct BivAlg {
  PolyAlg<BaseOps> A;
  static int deg_y(const BivPoly& a) { return (int)a.size() - 1; }
  bool is_zero(const BivPoly& a) const { return a.empty(); }
  void trim(BivPoly& a) const {
    while (!a.empty() && a.back().empty()) a.pop_back();
  }
  bool is_unit(const BivPoly& a) const {
    return a.size() == 1 && PolyAlg<BaseOps>::deg(a[0]) == 0;
  }
  BivPoly sub(const BivPoly& a, const BivPoly& b) const;
  BivPoly mul(const BivPoly& a, const BivPoly& b) const;
  BasePoly content(const BivPoly& a) const;
  BivPoly scale(const BasePoly& c, const BivPoly& a) const;
  BivPoly prim_part(const BivPoly& a) const;
  // Pseudo-remainder of a by b in y (b nonzero, deg_y b <= deg_y a).
  BivPoly prem(BivPoly a, const BivPoly& b) const;
  // gcd up to a base-field unit; exact content times primitive gcd.
  BivPoly gcd(BivPoly a, BivPoly b) const;
  BivPoly deriv_y(const BivPoly& a) const;
  BivPoly deriv_x(const BivPoly& a) const;
};

// --- ELIMINATE tables -----------------------------------------------------
// Resultants in y are computed by specializing x at every point of an
// evaluation field E = F_{q^s} with |E| = 32 or 27 > 16 >= deg_x Res, taking
// Sylvester determinants there, and interpolating back.  The tables hold the
// per-point contribution of each quintic monomial to each chart partial.
struct EliminateTables {
  const ff::Field* E;                // evaluation field (borrowed from Context)
  std::uint32_t n;                   // |E|
  std::uint32_t p;
  const std::uint16_t* add3 = nullptr;
  // val[j][t][m]: coefficient contribution of monomial m to partial t at
  // x = elem j; the y-exponent it lands on is yexp[t][m] (-1: none).
  // val2 carries the same contributions doubled (coefficient 2, p = 3 only).
  std::vector<std::array<std::array<std::uint16_t, 21>, 3>> val, val2;
  std::array<std::array<int, 21>, 3> yexp{};
  // lagrange[j]: coefficients (ascending) of the basis polynomial that is 1
  // at elem j and 0 elsewhere; every element of E is a node.
  std::vector<std::vector<std::uint16_t>> lagrange;

  explicit EliminateTables(const ff::Field& eval_field);

  // operands below 243, so one add3 block suffices
  ff::Elem fadd(ff::Elem a, ff::Elem b) const {
    return p == 2 ? (a ^ b) : (ff::Elem)add3[a * 243 + b];
  }
};

// Chart partials of f (z = 1) as bivariate polynomials over F_p, in the
// order d/dx, d/dy, d/dz.  Exact; used for degree structure and slow paths.
std::array<BivPoly, 3> chart_partials(const plane::QuinticForm& f, std::uint32_t p);

// f restricted to the chart z = 1 as a bivariate polynomial.
BivPoly chart_poly(const plane::QuinticForm& f, std::uint32_t p);

// The five-coefficient rows of F restricted to z = 0: the quintic binary
// form f0 and the z-coefficient quartic f1 (ascending in x at y = 1).
void border_forms(const plane::QuinticForm& f, std::uint32_t p, BasePoly& f0,
                  BasePoly& f1);

std::uint64_t profile_seed(const plane::QuinticForm& f, const plane::FamilyContext& fc);

// Orbit-representative condition tables for d = 1..depth, indexed [d-1].
// Representatives come from the sieve enumeration over the same canonical
// fields, so packed indices agree.
std::vector<std::vector<ScanRep>> build_scan_tables(
    const std::vector<ff::Field>& deg_fields, std::uint32_t q, std::uint32_t depth);

}  // namespace trig5::census
