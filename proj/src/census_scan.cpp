// SCAN strategy: walk orbit representatives of P^2(F_{q^d}) \ {P} and test
// the four singularity conditions per representative.  Degrees 1..5 are
// always completed, which decides overflow: a non-reduced quintic carries a
// repeated line, conic, or conjugate line pair, and the closed points of
// that component alone push sum d*m_d past 9 by depth 4.

#include <cstring>
#include <stdexcept>

#include "census_internal.hpp"
#include "trig5/sieve.hpp"

namespace trig5::census {

namespace {

// values of (f, df/dx, df/dy, df/dz) of each monomial at pt over K
std::array<std::array<ff::Elem, 21>, 4> condition_values(const ff::Field& K,
                                                         const plane::ProjPoint& pt) {
  std::array<std::array<ff::Elem, 21>, 4> v{};
  std::array<ff::Elem, 6> xp{}, yp{}, zp{};
  xp[0] = yp[0] = zp[0] = K.one();
  for (int i = 1; i <= 5; ++i) {
    xp[i] = K.mul(xp[i - 1], pt.x);
    yp[i] = K.mul(yp[i - 1], pt.y);
    zp[i] = K.mul(zp[i - 1], pt.z);
  }
  for (int m = 0; m < 21; ++m) {
    auto [a, b, c] = plane::kMonomials[m];
    v[0][m] = K.mul(K.mul(xp[a], yp[b]), zp[c]);
    v[1][m] = a ? K.scalar_mul(a, K.mul(K.mul(xp[a - 1], yp[b]), zp[c])) : 0;
    v[2][m] = b ? K.scalar_mul(b, K.mul(K.mul(xp[a], yp[b - 1]), zp[c])) : 0;
    v[3][m] = c ? K.scalar_mul(c, K.mul(K.mul(xp[a], yp[b]), zp[c - 1])) : 0;
  }
  return v;
}

struct NzList {
  std::uint8_t mono[21];
  std::uint8_t scale[21];  // coefficient value minus one: index into tab[.][.]
  int n = 0;
};

NzList nonzero_coeffs(const plane::QuinticForm& f) {
  NzList nz;
  for (int m = 0; m < 21; ++m)
    if (f.coef[m]) {
      nz.mono[nz.n] = (std::uint8_t)m;
      nz.scale[nz.n] = (std::uint8_t)(f.coef[m] - 1);
      ++nz.n;
    }
  return nz;
}

template <bool kCharTwo>
std::uint64_t count_singular_reps(const std::vector<ScanRep>& reps, const NzList& nz,
                                  const std::uint16_t* add3) {
  std::uint64_t cnt = 0;
  for (const ScanRep& r : reps) {
    bool singular = true;
    for (int t = 0; t < 4 && singular; ++t) {
      std::uint32_t acc = 0;
      for (int i = 0; i < nz.n; ++i) {
        std::uint32_t v = r.tab[t][nz.mono[i]][nz.scale[i]];
        if constexpr (kCharTwo)
          acc ^= v;
        else
          acc = (std::uint32_t)ff::add3(acc, v, add3);
      }
      singular = acc == 0;
    }
    if (singular) ++cnt;
  }
  return cnt;
}

}  // namespace

std::vector<std::vector<ScanRep>> build_scan_tables(const std::vector<ff::Field>& deg_fields,
                                                    std::uint32_t q, std::uint32_t depth) {
  auto reps = sieve::orbit_reps(q, depth);
  std::vector<std::vector<ScanRep>> out(depth);
  for (std::uint32_t d = 1; d <= depth; ++d) {
    const ff::Field& K = deg_fields[d - 1];
    out[d - 1].resize(reps[d - 1].size());
    for (std::size_t i = 0; i < reps[d - 1].size(); ++i) {
      auto v = condition_values(K, reps[d - 1][i].point);
      ScanRep& sr = out[d - 1][i];
      for (int t = 0; t < 4; ++t)
        for (int m = 0; m < 21; ++m) {
          sr.tab[t][m][0] = (std::uint16_t)v[t][m];
          sr.tab[t][m][1] = (std::uint16_t)(q == 2 ? v[t][m] : K.add(v[t][m], v[t][m]));
        }
    }
  }
  return out;
}

std::uint64_t Context::scan_degree_count_(const plane::QuinticForm& f, std::uint32_t d) const {
  if (d == 0 || d > 9) throw std::invalid_argument("census: scan degree out of range");
  if (d <= table_depth_) {
    NzList nz = nonzero_coeffs(f);
    return fc_.q == 2 ? count_singular_reps<true>(scan_[d - 1], nz, nullptr)
                      : count_singular_reps<false>(scan_[d - 1], nz, ff::add3_block_table());
  }
  // on the fly: count exact-degree-d singular points, one orbit has d of them
  const ff::Field& K = deg_fields_[d - 1];
  std::uint64_t pts = 0;
  plane::enumerate_points(K, /*exclude_P=*/true, [&](const plane::ProjPoint& pt) {
    if (plane::point_exact_degree(K, pt) != d) return;
    if (plane::is_singular_at(K, f, pt)) ++pts;
  });
  if (pts % d) throw std::logic_error("census: exact-degree point count not divisible");
  return pts / d;
}

SingularProfile Context::scan_overflow_profile_(const plane::QuinticForm& f) const {
  SingularProfile sp;
  sp.overflow = true;
  for (std::uint32_t d = 1; d <= 5; ++d) sp.m_low[d - 1] = scan_degree_count_(f, d);
  return sp;
}

SingularProfile Context::profile_scan(const plane::QuinticForm& f) const {
  std::uint64_t m[9] = {};
  std::uint64_t w = 0;
  for (std::uint32_t d = 1; d <= 5; ++d) {
    m[d - 1] = scan_degree_count_(f, d);
    w += d * m[d - 1];
  }
  SingularProfile sp;
  for (int i = 0; i < 5; ++i) sp.m_low[i] = m[i];
  if (w > 9) {
    sp.overflow = true;
    return sp;
  }
  // reduced from here on: the remaining budget seats at most one more orbit
  for (std::uint32_t d = 6; d <= 9 && w + d <= 9; ++d) {
    m[d - 1] = scan_degree_count_(f, d);
    w += d * m[d - 1];
    if (w > 9) throw std::logic_error("census: weight above reduced bound in scan");
  }
  sp.lambda = combinat::from_mults(std::vector<std::uint64_t>(m, m + 9));
  return sp;
}

std::uint64_t Context::direct_singular_count(const plane::QuinticForm& f,
                                             std::uint32_t d) const {
  if (d == 0 || d > 9) throw std::invalid_argument("census: degree out of range");
  const ff::Field& K = deg_fields_[d - 1];
  std::uint64_t n = 0;
  plane::enumerate_points(K, /*exclude_P=*/true, [&](const plane::ProjPoint& pt) {
    if (plane::is_singular_at(K, f, pt)) ++n;
  });
  return n;
}

}  // namespace trig5::census
