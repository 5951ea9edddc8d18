// ELIMINATE strategy: the singular locus away from z = 0 is cut out by the
// three chart partials (the value follows from the Euler relation, p != 5).
// Eliminating y through resultants leaves a univariate whose irreducible
// factors index the candidate fibers; each fiber is resolved by a gcd over
// F_q[x]/(u), never embedding into a larger field.  Resultants are Sylvester
// determinants with formal degrees equal to the true y-degrees, evaluated at
// every point of F_32 / F_27 and Lagrange-interpolated; deg_x Res <= 16 < |E|
// keeps that exact, and the slack coefficients double as a consistency check.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "census_internal.hpp"
#include "trig5/typetables.hpp"

namespace trig5::census {

// --- BivAlg ---------------------------------------------------------------

BivPoly BivAlg::sub(const BivPoly& a, const BivPoly& b) const {
  BivPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = A.sub(r[i], b[i]);
  trim(r);
  return r;
}

BivPoly BivAlg::mul(const BivPoly& a, const BivPoly& b) const {
  if (a.empty() || b.empty()) return {};
  BivPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = A.add(r[i + j], A.mul(a[i], b[j]));
  trim(r);
  return r;
}

BasePoly BivAlg::content(const BivPoly& a) const {
  BasePoly c;
  for (const BasePoly& row : a) c = A.gcd(c, row);
  return c;
}

BivPoly BivAlg::scale(const BasePoly& c, const BivPoly& a) const {
  BivPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = A.mul(c, a[i]);
  trim(r);
  return r;
}

BivPoly BivAlg::prim_part(const BivPoly& a) const {
  if (a.empty()) return {};
  BasePoly c = content(a);
  BivPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = A.quot(a[i], c);
  return r;
}

BivPoly BivAlg::prem(BivPoly a, const BivPoly& b) const {
  const int db = deg_y(b);
  while (!a.empty() && deg_y(a) >= db) {
    const BasePoly lb = b.back();
    const BasePoly la = a.back();
    const std::size_t shift = a.size() - b.size();
    BivPoly t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) t[i] = A.mul(lb, a[i]);
    for (std::size_t j = 0; j < b.size(); ++j)
      t[shift + j] = A.sub(t[shift + j], A.mul(la, b[j]));
    trim(t);  // the top row cancels exactly
    a = std::move(t);
  }
  return a;
}

BivPoly BivAlg::gcd(BivPoly a, BivPoly b) const {
  trim(a);
  trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  BasePoly cont = A.gcd(content(a), content(b));
  a = prim_part(a);
  b = prim_part(b);
  if (deg_y(a) < deg_y(b)) a.swap(b);
  while (!b.empty() && deg_y(b) > 0) {
    BivPoly r = prem(a, b);
    a = std::move(b);
    b = r.empty() ? BivPoly{} : prim_part(r);
  }
  // leftover y-free b means the primitive parts are coprime
  BivPoly g = b.empty() ? std::move(a) : BivPoly{{A.k.one()}};
  return scale(cont, g);
}

BivPoly BivAlg::deriv_y(const BivPoly& a) const {
  BivPoly r;
  for (std::size_t i = 1; i < a.size(); ++i)
    r.push_back(A.scale(A.k.from_uint((std::uint32_t)(i % A.k.p)), a[i]));
  trim(r);
  return r;
}

BivPoly BivAlg::deriv_x(const BivPoly& a) const {
  BivPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = A.deriv(a[i]);
  trim(r);
  return r;
}

// --- builders ---------------------------------------------------------------

std::array<BivPoly, 3> chart_partials(const plane::QuinticForm& f, std::uint32_t p) {
  std::uint32_t g[3][5][5] = {};
  for (int m = 0; m < 21; ++m) {
    std::uint32_t c = f.coef[m];
    if (!c) continue;
    auto [a, b, cz] = plane::kMonomials[m];
    if (a) g[0][b][a - 1] = (g[0][b][a - 1] + a * c) % p;
    if (b) g[1][b - 1][a] = (g[1][b - 1][a] + b * c) % p;
    if (cz) g[2][b][a] = (g[2][b][a] + cz * c) % p;
  }
  std::array<BivPoly, 3> out;
  for (int t = 0; t < 3; ++t) {
    BivPoly w(5);
    for (int yb = 0; yb < 5; ++yb) {
      BasePoly row(5);
      for (int xa = 0; xa < 5; ++xa) row[xa] = (std::uint8_t)g[t][yb][xa];
      while (!row.empty() && !row.back()) row.pop_back();
      w[yb] = std::move(row);
    }
    while (!w.empty() && w.back().empty()) w.pop_back();
    out[t] = std::move(w);
  }
  return out;
}

BivPoly chart_poly(const plane::QuinticForm& f, std::uint32_t p) {
  std::uint32_t g[6][6] = {};
  for (int m = 0; m < 21; ++m) {
    auto [a, b, c] = plane::kMonomials[m];
    g[b][a] = f.coef[m] % p;
  }
  BivPoly w(6);
  for (int yb = 0; yb < 6; ++yb) {
    BasePoly row(6);
    for (int xa = 0; xa < 6; ++xa) row[xa] = (std::uint8_t)g[yb][xa];
    while (!row.empty() && !row.back()) row.pop_back();
    w[yb] = std::move(row);
  }
  while (!w.empty() && w.back().empty()) w.pop_back();
  return w;
}

void border_forms(const plane::QuinticForm& f, std::uint32_t p, BasePoly& f0,
                  BasePoly& f1) {
  f0.assign(6, 0);
  f1.assign(5, 0);
  for (int m = 0; m < 21; ++m) {
    auto [a, b, c] = plane::kMonomials[m];
    if (c == 0) f0[a] = (std::uint8_t)(f.coef[m] % p);
    else if (c == 1) f1[a] = (std::uint8_t)(f.coef[m] % p);
  }
  while (!f0.empty() && !f0.back()) f0.pop_back();
  while (!f1.empty() && !f1.back()) f1.pop_back();
}

std::uint64_t profile_seed(const plane::QuinticForm& f, const plane::FamilyContext& fc) {
  std::string bytes;
  bytes.push_back((char)f.family);
  bytes.push_back((char)fc.q);
  bytes.push_back((char)fc.t);
  bytes.push_back((char)fc.n);
  for (int m = 0; m < 21; ++m) bytes.push_back((char)f.coef[m]);
  return typetables::fnv1a64(bytes);
}

// --- evaluation tables ------------------------------------------------------

EliminateTables::EliminateTables(const ff::Field& eval_field)
    : E(&eval_field), n((std::uint32_t)eval_field.order()), p(eval_field.p()) {
  if (p == 3) add3 = ff::add3_block_table();
  for (int t = 0; t < 3; ++t)
    for (int m = 0; m < 21; ++m) yexp[t][m] = -1;
  for (int m = 0; m < 21; ++m) {
    auto [a, b, c] = plane::kMonomials[m];
    if (a) yexp[0][m] = b;
    if (b) yexp[1][m] = b - 1;
    if (c) yexp[2][m] = b;
  }
  val.resize(n);
  val2.resize(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    std::array<ff::Elem, 6> xp{};
    xp[0] = E->one();
    for (int i = 1; i <= 5; ++i) xp[i] = E->mul(xp[i - 1], (ff::Elem)j);
    for (int m = 0; m < 21; ++m) {
      auto [a, b, c] = plane::kMonomials[m];
      ff::Elem v[3] = {a ? E->scalar_mul(a, xp[a - 1]) : 0,
                       b ? E->scalar_mul(b, xp[a]) : 0,
                       c ? E->scalar_mul(c, xp[a]) : 0};
      for (int t = 0; t < 3; ++t) {
        val[j][t][m] = (std::uint16_t)v[t];
        val2[j][t][m] = (std::uint16_t)E->add(v[t], v[t]);
      }
    }
  }
  // x^n - x has derivative -1, so the basis polynomial at node j is minus
  // the synthetic-division quotient by (x - x_j)
  lagrange.assign(n, std::vector<std::uint16_t>(n, 0));
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<ff::Elem> qc(n, 0);
    qc[n - 1] = E->one();
    for (std::uint32_t k = n - 1; k >= 1; --k) {
      ff::Elem ck = k == 1 ? E->neg(E->one()) : 0;
      qc[k - 1] = E->add(ck, E->mul((ff::Elem)j, qc[k]));
    }
    for (std::uint32_t i = 0; i < n; ++i)
      lagrange[j][i] = (std::uint16_t)E->neg(qc[i]);
  }
}

// --- equal-degree splitting -------------------------------------------------

std::vector<BasePoly> edf(const PolyAlg<BaseOps>& A, BasePoly f, std::uint32_t d,
                          SplitMix64& rng) {
  const std::uint32_t p = A.k.p;
  std::vector<BasePoly> out, work{A.monic(std::move(f))};
  while (!work.empty()) {
    BasePoly g = std::move(work.back());
    work.pop_back();
    if ((std::uint32_t)PolyAlg<BaseOps>::deg(g) == d) {
      out.push_back(std::move(g));
      continue;
    }
    BasePoly r;
    for (int i = 0; i < PolyAlg<BaseOps>::deg(g); ++i)
      r.push_back((std::uint8_t)(rng.next() % p));
    A.trim(r);
    BasePoly s;
    if (p == 2) {
      // trace map sum r^(2^i), i < d, lands in F_2 on each factor
      BasePoly t = A.mod(r, g), acc = t;
      for (std::uint32_t i = 1; i < d; ++i) {
        t = A.mod(A.mul(t, t), g);
        acc = A.add(acc, t);
      }
      s = std::move(acc);
    } else {
      std::uint64_t e = 1;
      for (std::uint32_t i = 0; i < d; ++i) e *= p;
      s = A.sub(A.powmod(std::move(r), (e - 1) / 2, g), A.constant(A.k.one()));
    }
    BasePoly h = A.gcd(g, s);
    const int dh = PolyAlg<BaseOps>::deg(h);
    if (dh <= 0 || dh == PolyAlg<BaseOps>::deg(g)) {
      work.push_back(std::move(g));  // unlucky draw, next rng value differs
      continue;
    }
    work.push_back(A.quot(g, h));
    work.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- resultants -------------------------------------------------------------

namespace {

struct ElimField {
  const std::uint16_t* log;
  const std::uint16_t* alog;
  const std::uint16_t* add3;
  std::uint32_t n1;
  std::uint32_t p;

  explicit ElimField(const EliminateTables& T)
      : log(T.E->log_table().data()), alog(T.E->alog_table().data()), add3(T.add3),
        n1((std::uint32_t)T.E->order() - 1), p(T.p) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return p == 2 ? (a ^ b) : add3[a * 243 + b];
  }
  std::uint32_t neg(std::uint32_t a) const { return p == 2 ? a : add3[a * 243 + a]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!a || !b) return 0;
    std::uint32_t k = (std::uint32_t)log[a] + log[b];
    if (k >= n1) k -= n1;
    return alog[k];
  }
  std::uint32_t inv(std::uint32_t a) const { return alog[(n1 - log[a]) % n1]; }
};

// formal Sylvester determinant, exact: row swaps must flip the sign, or the
// per-node values pick up inconsistent signs and the interpolant is garbage
std::uint32_t sylvester_det(const ElimField& F, int da, int db, const std::uint16_t* ca,
                            const std::uint16_t* cb) {
  std::uint32_t M[8][8] = {};
  const int N = da + db;
  for (int i = 0; i < db; ++i)
    for (int t = 0; t <= da; ++t) M[i][i + t] = ca[da - t];
  for (int i = 0; i < da; ++i)
    for (int t = 0; t <= db; ++t) M[db + i][i + t] = cb[db - t];
  std::uint32_t det = 1;
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N && piv < 0; ++r)
      if (M[r][c]) piv = r;
    if (piv < 0) return 0;
    if (piv != c) {
      for (int k = c; k < N; ++k) std::swap(M[piv][k], M[c][k]);
      det = F.neg(det);
    }
    det = F.mul(det, M[c][c]);
    const std::uint32_t ip = F.inv(M[c][c]);
    for (int r = c + 1; r < N; ++r) {
      if (!M[r][c]) continue;
      const std::uint32_t fac = F.mul(M[r][c], ip);
      M[r][c] = 0;
      for (int k = c + 1; k < N; ++k)
        if (M[c][k]) M[r][k] = F.add(M[r][k], F.neg(F.mul(fac, M[c][k])));
    }
  }
  return det;
}

BasePoly interpolate(const EliminateTables& T, const ElimField& F,
                     const std::vector<std::uint32_t>& dets) {
  std::vector<std::uint32_t> acc(T.n, 0);
  for (std::uint32_t j = 0; j < T.n; ++j) {
    const std::uint32_t d = dets[j];
    if (!d) continue;
    const std::vector<std::uint16_t>& L = T.lagrange[j];
    for (std::uint32_t i = 0; i < T.n; ++i)
      if (L[i]) acc[i] = F.add(acc[i], F.mul(d, L[i]));
  }
  BasePoly out(T.n);
  for (std::uint32_t i = 0; i < T.n; ++i) {
    if (acc[i] >= T.p)
      throw std::logic_error("census: resultant coefficient outside base field");
    if (acc[i] && i > 16)
      throw std::logic_error("census: resultant degree above Bezout bound");
    out[i] = (std::uint8_t)acc[i];
  }
  while (!out.empty() && !out.back()) out.pop_back();
  return out;
}

BasePoly resultant_pair(const EliminateTables& T, const ElimField& F, int da, int db,
                        const std::vector<std::uint16_t>& sa,
                        const std::vector<std::uint16_t>& sb) {
  std::vector<std::uint32_t> dets(T.n);
  for (std::uint32_t j = 0; j < T.n; ++j)
    dets[j] = sylvester_det(F, da, db, &sa[j * 5], &sb[j * 5]);
  return interpolate(T, F, dets);
}

void table_specs(const EliminateTables& T, const plane::QuinticForm& f,
                 std::array<std::vector<std::uint16_t>, 3>& spec) {
  for (int t = 0; t < 3; ++t) spec[t].assign((std::size_t)T.n * 5, 0);
  int nm[21], nc[21], nn = 0;
  for (int m = 0; m < 21; ++m)
    if (f.coef[m]) {
      nm[nn] = m;
      nc[nn] = f.coef[m];
      ++nn;
    }
  for (std::uint32_t j = 0; j < T.n; ++j) {
    const auto& V = T.val[j];
    const auto& W = T.val2[j];
    for (int i = 0; i < nn; ++i) {
      const int m = nm[i];
      for (int t = 0; t < 3; ++t) {
        const int k = T.yexp[t][m];
        if (k < 0) continue;
        const std::uint16_t v = nc[i] == 1 ? V[t][m] : W[t][m];
        if (v) {
          std::uint16_t& slot = spec[t][j * 5 + (std::uint32_t)k];
          slot = (std::uint16_t)T.fadd(slot, v);
        }
      }
    }
  }
}

void direct_specs(const EliminateTables& T, const std::array<BivPoly, 3>& parts,
                  std::array<std::vector<std::uint16_t>, 3>& spec) {
  for (int t = 0; t < 3; ++t) {
    spec[t].assign((std::size_t)T.n * 5, 0);
    for (std::size_t k = 0; k < parts[t].size(); ++k) {
      const BasePoly& row = parts[t][k];
      if (row.empty()) continue;
      for (std::uint32_t j = 0; j < T.n; ++j) {
        ff::Elem v = 0;
        for (std::size_t i = row.size(); i-- > 0;)
          v = T.E->add(T.E->mul(v, (ff::Elem)j), (ff::Elem)row[i]);
        spec[t][j * 5 + k] = (std::uint16_t)v;
      }
    }
  }
}

std::array<BivPoly, 3> transpose_parts(const std::array<BivPoly, 3>& in) {
  std::array<BivPoly, 3> out;
  for (int t = 0; t < 3; ++t) {
    std::size_t xd = 0;
    for (const BasePoly& row : in[t]) xd = std::max(xd, row.size());
    BivPoly o(xd);
    for (std::size_t b = 0; b < in[t].size(); ++b)
      for (std::size_t a = 0; a < in[t][b].size(); ++a)
        if (in[t][b][a]) {
          if (o[a].size() <= b) o[a].resize(b + 1, 0);
          o[a][b] = in[t][b][a];
        }
    while (!o.empty() && o.back().empty()) o.pop_back();
    out[t] = std::move(o);
  }
  return out;
}

// counts closed points of the fiber over irreducible u; strip_origin drops
// the marked point from the u = x fiber.  false means the whole fiber is
// singular (non-reduced curve).
bool fiber_counts(const PolyAlg<BaseOps>& A, const std::vector<const BivPoly*>& E,
                  const BasePoly& u, bool strip_origin, std::uint64_t* m) {
  ExtOps K(A.k.p, u);
  PolyAlg<ExtOps> AK{K};
  const std::uint64_t e = K.e;
  ExtPoly h;
  for (const BivPoly* Eb : E) {
    ExtPoly eb;
    for (const BasePoly& row : *Eb) eb.push_back(A.mod(row, u));
    AK.trim(eb);
    h = AK.gcd(std::move(h), eb);
    if (!h.empty() && PolyAlg<ExtOps>::deg(h) == 0) return true;  // coprime fiber
  }
  if (h.empty()) return false;
  h = AK.radical(std::move(h));
  if (strip_origin) {
    if (!K.is_zero(h[0]))
      throw std::logic_error("census: marked point missing from its fiber");
    h.erase(h.begin());
    if (PolyAlg<ExtOps>::deg(h) <= 0) return true;
  }
  for (auto& [e2, prod] : AK.ddf(std::move(h))) {
    const std::uint64_t cnt = (std::uint64_t)PolyAlg<ExtOps>::deg(prod) / e2;
    const std::uint64_t d = e * e2;
    if (d > 9) throw std::logic_error("census: fiber point beyond reduced bound");
    m[d - 1] += cnt;
  }
  return true;
}

enum class ChartOutcome { Done, Overflow, Degenerate };

ChartOutcome chart_phase(const EliminateTables& T, const PolyAlg<BaseOps>& A,
                         const std::array<BivPoly, 3>& parts,
                         const std::array<std::vector<std::uint16_t>, 3>& spec,
                         std::uint64_t* m, SplitMix64& rng, bool& slow) {
  const BivAlg B{A};
  std::vector<int> E;
  std::vector<const BasePoly*> U;
  for (int t = 0; t < 3; ++t) {
    const BivPoly& w = parts[t];
    if (w.empty()) continue;
    if (BivAlg::deg_y(w) == 0) {
      if (PolyAlg<BaseOps>::deg(w[0]) == 0)
        throw std::logic_error("census: nonzero constant partial");
      U.push_back(&w[0]);
    } else {
      E.push_back(t);
    }
  }
  if (E.empty() && U.empty())
    throw std::logic_error("census: all chart partials vanish");
  // y-free conditions alone are satisfied on whole vertical lines
  if (E.empty()) return ChartOutcome::Overflow;
  BasePoly g;
  if (E.size() == 1) {
    if (U.empty()) return ChartOutcome::Overflow;  // a single curve condition
    g = *U[0];
    for (std::size_t i = 1; i < U.size(); ++i) g = A.gcd(g, *U[i]);
  } else {
    const ElimField F(T);
    auto res_pair = [&](int i, int j) {
      return resultant_pair(T, F, BivAlg::deg_y(parts[E[(std::size_t)i]]),
                            BivAlg::deg_y(parts[E[(std::size_t)j]]),
                            spec[(std::size_t)E[(std::size_t)i]],
                            spec[(std::size_t)E[(std::size_t)j]]);
    };
    std::vector<BasePoly> cands;
    BasePoly R = res_pair(0, 1);
    if (!R.empty()) cands.push_back(std::move(R));
    if (E.size() == 3) {
      R = res_pair(0, 2);
      if (!R.empty()) cands.push_back(std::move(R));
    }
    for (const BasePoly* u : U) cands.push_back(*u);
    if (cands.empty()) {
      // every pair with the first partial shares a y-positive factor
      slow = true;
      BivPoly g3 = parts[E[0]];
      for (std::size_t i = 1; i < E.size(); ++i) g3 = B.gcd(std::move(g3), parts[E[i]]);
      if (!B.is_unit(g3)) return ChartOutcome::Overflow;
      if (E.size() == 3) {
        R = res_pair(1, 2);
        if (!R.empty()) cands.push_back(std::move(R));
      }
      if (cands.empty()) return ChartOutcome::Degenerate;
    }
    g = std::move(cands[0]);
    for (std::size_t i = 1; i < cands.size(); ++i) g = A.gcd(g, cands[i]);
  }
  // the marked point pins x = 0 onto every candidate
  if (g.empty() || g[0] != 0)
    throw std::logic_error("census: eliminant misses the marked fiber");
  std::vector<const BivPoly*> Eo;
  for (int t : E) Eo.push_back(&parts[(std::size_t)t]);
  for (auto& [d, prod] : A.ddf(A.radical(std::move(g)))) {
    std::vector<BasePoly> us;
    if ((std::uint32_t)PolyAlg<BaseOps>::deg(prod) == d)
      us.push_back(std::move(prod));
    else
      us = edf(A, std::move(prod), d, rng);
    for (const BasePoly& u : us) {
      const bool strip = d == 1 && u[0] == 0;
      if (!fiber_counts(A, Eo, u, strip, m)) return ChartOutcome::Overflow;
    }
  }
  return ChartOutcome::Done;
}

}  // namespace

// --- entry points -----------------------------------------------------------

SingularProfile Context::profile_eliminate(const plane::QuinticForm& f) const {
  const std::uint32_t p = fc_.q;
  const PolyAlg<BaseOps> A{BaseOps{p}};
  std::uint64_t m[9] = {};

  BasePoly f0, f1;
  border_forms(f, p, f0, f1);
  if (f0.empty() && f1.empty()) return scan_overflow_profile_(f);  // z^2 | F

  {
    // boundary points on z = 0: common roots of the restricted conditions
    BasePoly f0x = A.deriv(f0);
    BasePoly f0y;
    for (std::size_t k = 0; k < f0.size() && k <= 4; ++k)
      f0y.push_back((std::uint8_t)((5 - k) % p * f0[k] % p));
    A.trim(f0y);
    struct FormDeg {
      const BasePoly* w;
      std::size_t D;
    };
    std::vector<FormDeg> forms;
    if (!f0.empty()) forms.push_back({&f0, 5});
    if (!f0x.empty()) forms.push_back({&f0x, 4});
    if (!f0y.empty()) forms.push_back({&f0y, 4});
    if (!f1.empty()) forms.push_back({&f1, 4});
    bool at_infinity = true;  // (1:0:0): top form coefficients all vanish
    for (const FormDeg& fd : forms) at_infinity = at_infinity && fd.w->size() != fd.D + 1;
    if (at_infinity) m[0] += 1;
    BasePoly g0 = *forms[0].w;
    for (std::size_t i = 1; i < forms.size(); ++i) g0 = A.gcd(g0, *forms[i].w);
    if (PolyAlg<BaseOps>::deg(g0) > 0)
      for (auto& [d, prod] : A.ddf(A.radical(std::move(g0))))
        m[d - 1] += (std::uint64_t)PolyAlg<BaseOps>::deg(prod) / d;
  }

  SplitMix64 rng(profile_seed(f, fc_));
  auto parts = chart_partials(f, p);
  std::array<std::vector<std::uint16_t>, 3> spec;
  table_specs(*elim_, f, spec);
  std::uint64_t mc[9] = {};
  bool slow = false;
  ChartOutcome oc = chart_phase(*elim_, A, parts, spec, mc, rng, slow);
  if (oc == ChartOutcome::Degenerate) {
    auto tp = transpose_parts(parts);
    direct_specs(*elim_, tp, spec);
    std::fill(mc, mc + 9, 0);
    oc = chart_phase(*elim_, A, tp, spec, mc, rng, slow);
  }
  if (slow) ++slow_paths_;
  if (oc == ChartOutcome::Degenerate) {
    ++fallback_scans_;
    return profile_scan(f);
  }
  if (oc == ChartOutcome::Overflow) return scan_overflow_profile_(f);
  for (int i = 0; i < 9; ++i) m[i] += mc[i];

  std::uint64_t w = 0;
  for (int i = 0; i < 9; ++i) w += (std::uint64_t)(i + 1) * m[i];
  if (w > 9)
    throw std::logic_error("census: weight above reduced bound in elimination");
  SingularProfile sp;
  for (int i = 0; i < 5; ++i) sp.m_low[i] = m[i];
  sp.lambda = combinat::from_mults(std::vector<std::uint64_t>(m, m + 9));
  return sp;
}

bool Context::is_reduced(const plane::QuinticForm& f) const {
  const std::uint32_t p = fc_.q;
  const PolyAlg<BaseOps> A{BaseOps{p}};
  BasePoly f0, f1;
  border_forms(f, p, f0, f1);
  if (f0.empty() && f1.empty()) return false;  // z^2 | F
  // with the z-valuation at most 1, repeated factors survive into the chart
  const BivAlg B{A};
  auto parts = chart_partials(f, p);
  const BivPoly& hx = parts[0];
  const BivPoly& hy = parts[1];
  if (hx.empty() && hy.empty()) return false;  // a p-th power in the chart
  BivPoly g = chart_poly(f, p);
  if (!hx.empty()) g = B.gcd(std::move(g), hx);
  if (!hy.empty()) g = B.gcd(std::move(g), hy);
  return B.is_unit(g);
}

}  // namespace trig5::census
