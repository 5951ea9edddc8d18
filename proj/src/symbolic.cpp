#include "trig5/symbolic.hpp"

#include <stdexcept>
#include <vector>

namespace trig5::symbolic {

QPoly zeta_inverse_pi(std::uint32_t n, bool minus_point, std::uint32_t w) {
  // 1/Z = prod_{i=0..n} (1 - q^i t), dropping i = 0 when the point is removed
  std::vector<QPoly> coef{QPoly::constant(1)};  // polynomial in t
  for (std::uint32_t i = minus_point ? 1 : 0; i <= n; ++i) {
    std::vector<QPoly> next(coef.size() + 1);
    for (size_t j = 0; j < coef.size(); ++j) {
      next[j] += coef[j];
      next[j + 1] -= coef[j] * QPoly::q_pow(i);
    }
    coef = std::move(next);
  }
  return w < coef.size() ? coef[w] : QPoly{};
}

QPoly stabilizer_order(Family f) {
  QPoly q = QPoly::q_pow(1), one = QPoly::constant(1), two = QPoly::constant(2);
  QPoly qm1 = q - one;
  switch (f) {
    case Family::Split: return two * QPoly::q_pow(2) * qm1 * qm1;
    case Family::NonSplit: return two * (QPoly::q_pow(4) - QPoly::q_pow(2));
    case Family::Cusp: return QPoly::q_pow(3) * qm1 * qm1;
  }
  throw std::logic_error("bad family");
}

QPoly family_affine_count(Family f, std::uint32_t s) {
  if (s > 5) throw std::invalid_argument("family_affine_count: s > 5");
  QPoly main = QPoly::q_pow(15 - 3 * (std::int64_t)s);
  if (f == Family::Cusp) return main - QPoly::q_pow(14 - 3 * (std::int64_t)s);
  return main;
}

QPoly sieve_numerator(Family f) {
  QPoly s;
  for (std::uint32_t w = 0; w <= 5; ++w)
    s += zeta_inverse_pi(2, true, w) * family_affine_count(f, w);
  return s;
}

QPoly sieve_closed_form(Family f) {
  return sieve_numerator(f).exact_div(stabilizer_order(f));
}

QPoly main_theorem(const QPoly& explicit_part) {
  QPoly s = explicit_part;
  for (Family f : {Family::Split, Family::NonSplit, Family::Cusp})
    s += sieve_closed_form(f);
  return s;
}

namespace {

using ff::Elem;
using ff::Field;

// u proportional to v as nonzero triples over F
bool proportional(const Field& F, const Elem* u, const Elem* v) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (F.mul(u[i], v[j]) != F.mul(u[j], v[i])) return false;
  return true;
}

}  // namespace

std::uint64_t stabilizer_brute_force(Family f, std::uint32_t q) {
  // normalized matrices (first nonzero entry 1, row-major scan) are exactly
  // the elements of PGL_3(F_q)
  Field F = [&] {
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
      if (q == p) return Field::make(p, 1, 1);
    if (q == 4) return Field::make(2, 2, 2);
    throw std::invalid_argument("stabilizer_brute_force: unsupported q");
  }();
  bool prime_q = F.m() == 1;
  if (f == Family::NonSplit && !prime_q)
    throw std::invalid_argument("nonsplit brute force needs prime q");
  Field K = f == Family::NonSplit ? Field::make(q, 1, 2) : Field::make(2, 1, 1);
  Elem alpha = 0, alphabar = 0;
  if (f == Family::NonSplit) {
    alpha = K.theta();
    alphabar = K.frobenius(alpha);
  }

  std::uint64_t n = F.order(), count = 0;
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= n;
  for (std::uint64_t code = 0; code < total; ++code) {
    Elem M[3][3];
    std::uint64_t c = code;
    bool normalized = true, seen_nonzero = false;
    for (int i = 0; i < 3 && normalized; ++i)
      for (int j = 0; j < 3 && normalized; ++j) {
        M[i][j] = c % n;
        c /= n;
        if (!seen_nonzero && M[i][j]) {
          seen_nonzero = true;
          if (M[i][j] != 1) normalized = false;
        }
      }
    if (!normalized || !seen_nonzero) continue;
    Elem det = F.sub(
        F.sub(F.add(F.add(F.mul(M[0][0], F.mul(M[1][1], M[2][2])),
                          F.mul(M[0][1], F.mul(M[1][2], M[2][0]))),
                    F.mul(M[0][2], F.mul(M[1][0], M[2][1]))),
              F.add(F.mul(M[0][2], F.mul(M[1][1], M[2][0])),
                    F.mul(M[0][1], F.mul(M[1][0], M[2][2])))),
        F.mul(M[0][0], F.mul(M[1][2], M[2][1])));
    if (!det) continue;
    // fix P = (0:0:1): third column proportional to (0,0,1)
    if (M[0][2] || M[1][2]) continue;

    bool ok = false;
    const Elem e1[3] = {1, 0, 0}, e2[3] = {0, 1, 0};
    switch (f) {
      case Family::Split:
        // covectors x, y map to the set {x, y}: rows 0 and 1
        ok = (proportional(F, M[0], e1) && proportional(F, M[1], e2)) ||
             (proportional(F, M[0], e2) && proportional(F, M[1], e1));
        break;
      case Family::Cusp:
        ok = proportional(F, M[1], e2);
        break;
      case Family::NonSplit: {
        // conjugate covectors (1, alpha, 0), (1, alphabar, 0) over GF(q^2);
        // prime-field entries embed as identical indices
        Elem l1[3] = {1, alpha, 0}, l2[3] = {1, alphabar, 0};
        Elem r1[3], r2[3];
        for (int j = 0; j < 3; ++j) {
          r1[j] = K.add(M[0][j], K.mul(alpha, M[1][j]));
          r2[j] = K.add(M[0][j], K.mul(alphabar, M[1][j]));
          // third row contributes via l[2] = 0: nothing to add
        }
        auto prop2 = [&](const Elem* u, const Elem* v) {
          for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
              if (K.mul(u[i], v[j]) != K.mul(u[j], v[i])) return false;
          return true;
        };
        ok = (prop2(r1, l1) && prop2(r2, l2)) || (prop2(r1, l2) && prop2(r2, l1));
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace trig5::symbolic
