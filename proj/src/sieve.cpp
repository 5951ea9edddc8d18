#include "trig5/sieve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "trig5/symbolic.hpp"

namespace trig5::sieve {

namespace {

// enumeration-order key of a normalized point; smaller = earlier
std::array<std::uint64_t, 3> order_key(const plane::ProjPoint& pt) {
  if (pt.x == 1) return {0, pt.y, pt.z};
  if (pt.y == 1) return {1, pt.z, 0};
  return {2, 0, 0};
}

bool is_orbit_minimum(const ff::Field& K, const plane::ProjPoint& pt,
                      std::uint32_t degree) {
  auto key = order_key(pt);
  plane::ProjPoint r = pt;
  for (std::uint32_t i = 1; i < degree; ++i) {
    r = plane::normalize(K, plane::frobenius_point(K, r));
    if (order_key(r) < key) return false;
  }
  return true;
}

// values of f and its three partials at pt, per monomial
using CondVals = std::array<std::array<ff::Elem, 21>, 4>;

CondVals condition_values(const ff::Field& K, const plane::ProjPoint& pt) {
  std::array<ff::Elem, 6> px, py, pz;
  px[0] = py[0] = pz[0] = K.one();
  for (int i = 1; i <= 5; ++i) {
    px[i] = K.mul(px[i - 1], pt.x);
    py[i] = K.mul(py[i - 1], pt.y);
    pz[i] = K.mul(pz[i - 1], pt.z);
  }
  CondVals v{};
  std::uint32_t p = K.p();
  for (int i = 0; i < 21; ++i) {
    auto [a, b, c] = plane::kMonomials[i];
    v[0][i] = K.mul(K.mul(px[a], py[b]), pz[c]);
    v[1][i] = a % p == 0 ? 0
                         : K.scalar_mul(a % p, K.mul(K.mul(px[a - 1], py[b]), pz[c]));
    v[2][i] = b % p == 0 ? 0
                         : K.scalar_mul(b % p, K.mul(K.mul(px[a], py[b - 1]), pz[c]));
    v[3][i] = c % p == 0 ? 0
                         : K.scalar_mul(c % p, K.mul(K.mul(px[a], py[b]), pz[c - 1]));
  }
  return v;
}

std::vector<std::pair<int, std::uint32_t>> fixed_part(
    const plane::FamilyContext& ctx, plane::Family f) {
  switch (f) {
    case plane::Family::Split:
      return {{plane::kCoefXYZ3, 1}};
    case plane::Family::NonSplit:
      return {{plane::kCoefX2Z3, 1}, {plane::kCoefXYZ3, ctx.t}, {plane::kCoefY2Z3, ctx.n}};
    case plane::Family::Cusp:
      return {{plane::kCoefY2Z3, 1}};
  }
  throw std::logic_error("bad family");
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<std::vector<OrbitRep>> orbit_reps(std::uint32_t q,
                                              std::uint32_t max_degree) {
  std::vector<std::vector<OrbitRep>> out(max_degree);
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    ff::Field K = ff::Field::make(q, 1, d);
    plane::enumerate_points(K, /*exclude_P=*/true, [&](plane::ProjPoint pt) {
      if (plane::point_exact_degree(K, pt) != d) return;
      if (!is_orbit_minimum(K, pt, d)) return;
      out[d - 1].push_back({pt, d});
    });
  }
  return out;
}

Engine::Engine(plane::FamilyContext ctx, std::uint32_t max_degree)
    : ctx_(ctx), max_degree_(max_degree), reps_(orbit_reps(ctx.q, max_degree)) {
  rows_.resize(max_degree_);
  std::array<std::vector<std::pair<int, std::uint32_t>>, 3> fixed = {
      fixed_part(ctx_, plane::Family::Split),
      fixed_part(ctx_, plane::Family::NonSplit),
      fixed_part(ctx_, plane::Family::Cusp)};
  for (std::uint32_t d = 1; d <= max_degree_; ++d) {
    ff::Field K = ff::Field::make(ctx_.q, 1, d);
    rows_[d - 1].reserve(reps_[d - 1].size());
    for (const OrbitRep& rep : reps_[d - 1]) {
      CondVals v = condition_values(K, rep.point);
      RepRows rr;
      rr.degree = d;
      rr.a.assign(std::size_t{4} * d * 15, 0);
      for (auto& r : rr.rhs) r.assign(std::size_t{4} * d, 0);
      for (int t = 0; t < 4; ++t) {
        for (int col = 0; col < 15; ++col) {
          auto digits = K.coeffs(v[t][plane::kFreeCoeff[col]]);
          for (std::uint32_t j = 0; j < d; ++j)
            rr.a[(static_cast<std::size_t>(t) * d + j) * 15 + col] =
                static_cast<std::uint8_t>(digits[j]);
        }
        for (int f = 0; f < 3; ++f) {
          ff::Elem acc = 0;
          for (auto [mono, val] : fixed[f])
            acc = K.add(acc, K.scalar_mul(val, v[t][mono]));
          auto digits = K.coeffs(K.neg(acc));
          for (std::uint32_t j = 0; j < d; ++j)
            rr.rhs[f][static_cast<std::size_t>(t) * d + j] = static_cast<std::uint8_t>(digits[j]);
        }
      }
      rows_[d - 1].push_back(std::move(rr));
    }
  }
}

const std::vector<OrbitRep>& Engine::reps(std::uint32_t degree) const {
  if (degree == 0 || degree > max_degree_) throw std::out_of_range("degree");
  return reps_[degree - 1];
}

std::size_t Engine::rep_count(std::uint32_t degree) const {
  return reps(degree).size();
}

std::uint64_t Engine::count_with_rows_(
    plane::Family family,
    const std::vector<std::pair<std::uint32_t, std::size_t>>& sel,
    bool force_zero_x3z2) const {
  std::size_t nrows = force_zero_x3z2 ? 1 : 0;
  for (auto [d, idx] : sel) {
    if (d == 0 || d > max_degree_ || idx >= rows_[d - 1].size())
      throw std::out_of_range("orbit selection");
    nrows += std::size_t{4} * d;
  }
  int fam = static_cast<int>(family);
  std::vector<std::uint8_t> m(nrows * 16, 0);
  std::size_t r0 = 0;
  for (auto [d, idx] : sel) {
    const RepRows& rr = rows_[d - 1][idx];
    for (std::size_t r = 0; r < std::size_t{4} * d; ++r) {
      for (int col = 0; col < 15; ++col) m[(r0 + r) * 16 + col] = rr.a[r * 15 + col];
      m[(r0 + r) * 16 + 15] = rr.rhs[fam][r];
    }
    r0 += std::size_t{4} * d;
  }
  if (force_zero_x3z2) {
    int pos = static_cast<int>(
        std::find(plane::kFreeCoeff.begin(), plane::kFreeCoeff.end(),
                  plane::kCoefX3Z2) -
        plane::kFreeCoeff.begin());
    m[r0 * 16 + pos] = 1;
  }

  std::uint32_t p = ctx_.q;
  std::size_t pivot_row = 0;
  int rank = 0;
  for (int col = 0; col < 15 && pivot_row < nrows; ++col) {
    std::size_t pr = pivot_row;
    while (pr < nrows && m[pr * 16 + col] == 0) ++pr;
    if (pr == nrows) continue;
    if (pr != pivot_row)
      for (int j = col; j < 16; ++j) std::swap(m[pr * 16 + j], m[pivot_row * 16 + j]);
    std::uint32_t iv = inv_mod(m[pivot_row * 16 + col], p);
    for (int j = col; j < 16; ++j)
      m[pivot_row * 16 + j] = static_cast<std::uint8_t>(m[pivot_row * 16 + j] * iv % p);
    for (std::size_t r = pivot_row + 1; r < nrows; ++r) {
      std::uint32_t f = m[r * 16 + col];
      if (f == 0) continue;
      std::uint32_t c = p - f;
      for (int j = col; j < 16; ++j)
        m[r * 16 + j] =
            static_cast<std::uint8_t>((m[r * 16 + j] + c * m[pivot_row * 16 + j]) % p);
    }
    ++pivot_row;
    ++rank;
  }
  for (std::size_t r = pivot_row; r < nrows; ++r)
    if (m[r * 16 + 15] != 0) return 0;

  std::uint64_t count = 1;
  for (int i = rank; i < 15; ++i) count *= ctx_.q;
  return count;
}

std::uint64_t Engine::count_solutions(
    plane::Family family,
    const std::vector<std::pair<std::uint32_t, std::size_t>>& sel) const {
  for (std::size_t i = 0; i < sel.size(); ++i)
    for (std::size_t j = i + 1; j < sel.size(); ++j)
      if (sel[i] == sel[j]) throw std::invalid_argument("repeated orbit");
  if (family != plane::Family::Cusp) return count_with_rows_(family, sel, false);
  return count_with_rows_(family, sel, false) - count_with_rows_(family, sel, true);
}

combinat::Int Engine::signed_sum(plane::Family family, std::uint32_t w) const {
  combinat::Int total = 0;
  for (const combinat::Partition& lambda : combinat::partitions_of_weight(w)) {
    std::uint32_t orbits = 0;
    bool feasible = true;
    for (auto [part, mult] : lambda) {
      if (part > max_degree_ || mult > rep_count(part)) {
        feasible = false;
        break;
      }
      orbits += mult;
    }
    if (!feasible) continue;

    std::uint64_t subtotal = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> sel;
    std::function<void(std::size_t)> walk = [&](std::size_t pi) {
      if (pi == lambda.size()) {
        subtotal += count_solutions(family, sel);
        return;
      }
      auto [part, mult] = lambda[pi];
      std::size_t n = rep_count(part);
      std::vector<std::size_t> idx(mult);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      while (true) {
        for (std::size_t i : idx) sel.emplace_back(part, i);
        walk(pi + 1);
        sel.resize(sel.size() - mult);
        std::size_t j = mult;
        while (j > 0 && idx[j - 1] == n - mult + (j - 1)) --j;
        if (j == 0) break;
        ++idx[j - 1];
        for (std::size_t k = j; k < mult; ++k) idx[k] = idx[k - 1] + 1;
      }
    };
    walk(0);
    if (orbits % 2 == 0)
      total += subtotal;
    else
      total -= subtotal;
  }
  return total;
}

SumReport run_sums(Engine& engine, plane::Family family) {
  SumReport rep;
  rep.family = family;
  rep.q = engine.context().q;
  for (std::uint32_t w = 0; w <= 5; ++w)
    rep.per_weight.push_back(engine.signed_sum(family, w));
  rep.total = std::accumulate(rep.per_weight.begin(), rep.per_weight.end(),
                              combinat::Int(0));
  rep.numerator_value = symbolic::sieve_numerator(family).eval_int(rep.q);
  rep.matches_numerator = rep.total == rep.numerator_value;
  return rep;
}

}  // namespace trig5::sieve
