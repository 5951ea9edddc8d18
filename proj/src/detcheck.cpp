#include "trig5/detcheck.hpp"

#include <stdexcept>

#include "trig5/plane.hpp"

namespace trig5::detcheck {
namespace {

std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;  // p < 2^31, operands reduced
}

std::uint64_t addp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = a + b;
  return r >= p ? r - p : r;
}

std::uint64_t subp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t powp(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulp(r, a, p);
    a = mulp(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invp(std::uint64_t a, std::uint64_t p) { return powp(a, p - 2, p); }

struct Pt {
  std::uint64_t x, y, z;
};

// value and partials of x^a y^b z^c at pt
std::uint64_t mono_eval(int a, int b, int c, const Pt& q, std::uint64_t p) {
  return mulp(mulp(powp(q.x, a, p), powp(q.y, b, p), p), powp(q.z, c, p), p);
}

std::uint64_t mono_d(int a, int b, int c, int var, const Pt& q, std::uint64_t p) {
  int e[3] = {a, b, c};
  if (e[var] == 0) return 0;
  std::uint64_t coef = e[var] % p;
  e[var] -= 1;
  return mulp(coef, mono_eval(e[0], e[1], e[2], q, p), p);
}

// cusp4 column monomials in the fixed order of the identity
constexpr int kCusp4Cols[12][2] = {{0, 3}, {1, 3}, {2, 2}, {3, 1}, {4, 0}, {2, 3},
                                   {3, 2}, {4, 1}, {5, 0}, {1, 4}, {0, 4}, {0, 5}};
// degrees in z complete each to 5: columns as (a, b) pairs
constexpr int kCusp4ColZ[12] = {2, 1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 0};

}  // namespace

const char* case_name(Case c) {
  switch (c) {
    case Case::GenPos5: return "genpos5";
    case Case::Lines: return "lines";
    case Case::Cusp4: return "cusp4";
  }
  throw std::logic_error("bad case");
}

Case case_from_name(const std::string& s) {
  if (s == "genpos5") return Case::GenPos5;
  if (s == "lines") return Case::Lines;
  if (s == "cusp4") return Case::Cusp4;
  throw std::invalid_argument("unknown determinant case: " + s);
}

int active_vars(Case c) { return c == Case::Lines ? 1 : 4; }

Matrix build_matrix(Case c, const Vars& v, std::uint64_t p) {
  auto [al, be, ga, de] = v;
  Matrix m;
  switch (c) {
    case Case::GenPos5: {
      const Pt pts[5] = {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, al, be}, {1, ga, de}};
      // columns: canonical quintic order minus the six family-fixed slots.
      // Conditions are value, d/dx, d/dz except at (1:0:0) where the Euler
      // relation makes d/dx redundant and d/dy is used instead.
      for (int pi = 0; pi < 5; ++pi) {
        const Pt& q = pts[pi];
        for (int var : {-1, pi == 0 ? 1 : 0, 2}) {
          std::vector<std::uint64_t> row;
          for (int i : plane::kFreeCoeff) {
            auto mo = plane::kMonomials[i];
            row.push_back(var < 0 ? mono_eval(mo.a, mo.b, mo.c, q, p)
                                  : mono_d(mo.a, mo.b, mo.c, var, q, p));
          }
          m.push_back(std::move(row));
        }
      }
      return m;
    }
    case Case::Lines: {
      const Pt pts[4] = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, al, 0}};
      const int cols[4][2] = {{3, 0}, {2, 1}, {1, 2}, {0, 3}};  // cubics in x, y
      for (const Pt& q : pts) {
        std::vector<std::uint64_t> row;
        for (auto [a, b] : cols) row.push_back(mono_eval(a, b, 0, q, p));
        m.push_back(std::move(row));
      }
      return m;
    }
    case Case::Cusp4: {
      const Pt pts[4] = {{0, 1, 0}, {1, 1, 1}, {1, al, be}, {1, ga, de}};
      // value, d/dy, d/dz except at (0:1:0) where d/dy is Euler-redundant
      for (int pi = 0; pi < 4; ++pi) {
        const Pt& q = pts[pi];
        for (int var : {-1, pi == 0 ? 0 : 1, 2}) {
          std::vector<std::uint64_t> row;
          for (int j = 0; j < 12; ++j) {
            int a = kCusp4Cols[j][0], b = kCusp4Cols[j][1], cz = kCusp4ColZ[j];
            row.push_back(var < 0 ? mono_eval(a, b, cz, q, p)
                                  : mono_d(a, b, cz, var, q, p));
          }
          m.push_back(std::move(row));
        }
      }
      return m;
    }
  }
  throw std::logic_error("bad case");
}

std::uint64_t target_value(Case c, const Vars& v, std::uint64_t p) {
  auto [al, be, ga, de] = v;
  auto t3 = [&](std::uint64_t a, std::uint64_t b, std::uint64_t cc) {
    return mulp(mulp(a, b, p), cc, p);
  };
  switch (c) {
    case Case::GenPos5: {
      // (abg - abd - agd + bgd - bg + ad)^4 (a-g)(a-1) a^2 (g-1) g^2
      std::uint64_t t = t3(al, be, ga);
      t = subp(t, t3(al, be, de), p);
      t = subp(t, t3(al, ga, de), p);
      t = addp(t, t3(be, ga, de), p);
      t = subp(t, mulp(be, ga, p), p);
      t = addp(t, mulp(al, de, p), p);
      std::uint64_t r = powp(t, 4, p);
      r = mulp(r, subp(al, ga, p), p);
      r = mulp(r, subp(al, 1, p), p);
      r = mulp(r, mulp(al, al, p), p);
      r = mulp(r, subp(ga, 1, p), p);
      r = mulp(r, mulp(ga, ga, p), p);
      return r;
    }
    case Case::Lines:
      return mulp(al, subp(al, 1, p), p);
    case Case::Cusp4: {
      // (abg - agd - ab + gd + a - g)^3 (a-g)^2 (a-1)^2 (g-1)^2
      std::uint64_t t = t3(al, be, ga);
      t = subp(t, t3(al, ga, de), p);
      t = subp(t, mulp(al, be, p), p);
      t = addp(t, mulp(ga, de, p), p);
      t = addp(t, al, p);
      t = subp(t, ga, p);
      std::uint64_t r = powp(t, 3, p);
      r = mulp(r, powp(subp(al, ga, p), 2, p), p);
      r = mulp(r, powp(subp(al, 1, p), 2, p), p);
      r = mulp(r, powp(subp(ga, 1, p), 2, p), p);
      return r;
    }
  }
  throw std::logic_error("bad case");
}

std::uint64_t det_gauss(Matrix m, std::uint64_t p) {
  std::size_t n = m.size();
  std::uint64_t det = 1;
  bool neg = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      neg = !neg;
    }
    det = mulp(det, m[k][k], p);
    std::uint64_t inv = invp(m[k][k], p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (!m[i][k]) continue;
      std::uint64_t f = mulp(m[i][k], inv, p);
      for (std::size_t j = k; j < n; ++j)
        m[i][j] = subp(m[i][j], mulp(f, m[k][j], p), p);
    }
  }
  return neg ? (p - det) % p : det;
}

std::uint64_t det_cofactor(const Matrix& m, std::uint64_t p) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  std::uint64_t det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!m[0][j]) continue;
    Matrix sub(n - 1, std::vector<std::uint64_t>(n - 1));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) sub[i - 1][c++] = m[i][k];
    std::uint64_t t = mulp(m[0][j], det_cofactor(sub, p), p);
    det = j % 2 ? subp(det, t, p) : addp(det, t, p);
  }
  return det;
}

GridReport verify_identity_mod(Case c, std::uint64_t prime) {
  GridReport rep;
  rep.c = c;
  rep.prime = prime;
  int nv = active_vars(c);
  std::uint64_t total = 1;
  for (int i = 0; i < nv; ++i) total *= 16;
  for (std::uint64_t code = 0; code < total; ++code) {
    Vars v{0, 0, 0, 0};
    std::uint64_t cc = code;
    for (int i = 0; i < nv; ++i) {
      v[i] = cc % 16;
      cc /= 16;
    }
    std::uint64_t det = det_gauss(build_matrix(c, v, prime), prime);
    std::uint64_t tgt = target_value(c, v, prime);
    ++rep.grid_points;
    if (tgt && !rep.sign) {
      std::uint64_t s = mulp(det, invp(tgt, prime), prime);
      if (s == 1)
        rep.sign = 1;
      else if (s == prime - 1)
        rep.sign = -1;
      else {
        ++rep.mismatches;  // ratio is not a sign: identity broken
        continue;
      }
    }
    std::uint64_t expect = rep.sign >= 0 ? tgt : (prime - tgt) % prime;
    if (det != expect) ++rep.mismatches;
  }
  return rep;
}

std::vector<GridReport> verify_identity(Case c) {
  std::vector<GridReport> reps;
  for (std::uint64_t p : kPrimes) reps.push_back(verify_identity_mod(c, p));
  return reps;
}

}  // namespace trig5::detcheck
