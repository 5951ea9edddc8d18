#include "trig5/sieve.hpp"

#include <doctest.h>

#include <map>
#include <vector>

#include "trig5/combinat.hpp"
#include "trig5/symbolic.hpp"

using trig5::combinat::Int;
using trig5::plane::Family;
using trig5::plane::FamilyContext;
using trig5::plane::ProjPoint;
using Sel = std::vector<std::pair<std::uint32_t, std::size_t>>;

namespace {

// index of the orbit containing pt (coordinates over Field::make(q,1,d))
std::size_t find_rep(const trig5::sieve::Engine& eng, const trig5::ff::Field& K,
                     std::uint32_t d, ProjPoint pt) {
  pt = trig5::plane::normalize(K, pt);
  const auto& rs = eng.reps(d);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    ProjPoint r = rs[i].point;
    for (std::uint32_t k = 0; k < d; ++k) {
      if (r == pt) return i;
      r = trig5::plane::normalize(K, trig5::plane::frobenius_point(K, r));
    }
  }
  throw std::runtime_error("point not found among orbit reps");
}

// direct census of family members singular at all listed orbit points
std::uint64_t brute_count(const FamilyContext& ctx, Family fam,
                          const std::vector<std::pair<std::uint32_t, ProjPoint>>& pts) {
  std::map<std::uint32_t, trig5::ff::Field> fields;
  for (const auto& [d, pt] : pts)
    fields.try_emplace(d, trig5::ff::Field::make(ctx.q, 1, d));
  std::uint64_t n = trig5::plane::family_size(fam, ctx.q), cnt = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto form = trig5::plane::curve_from_index(ctx, fam, i);
    bool ok = true;
    for (const auto& [d, pt] : pts)
      if (!trig5::plane::is_singular_at(fields.at(d), form, pt)) {
        ok = false;
        break;
      }
    cnt += ok;
  }
  return cnt;
}

}  // namespace

TEST_CASE("orbit representative counts match Mobius inversion") {
  for (std::uint32_t q : {2u, 3u}) {
    std::uint32_t maxd = q == 2 ? 9 : 5;
    auto reps = trig5::sieve::orbit_reps(q, maxd);
    std::vector<Int> pts;  // |P^2(F_{q^r})|
    for (std::uint32_t r = 1; r <= maxd; ++r) {
      Int qr = 1;
      for (std::uint32_t i = 0; i < r; ++i) qr *= q;
      pts.push_back(qr * qr + qr + 1);
    }
    auto orbits = trig5::combinat::mobius_orbit_counts(pts);
    for (std::uint32_t d = 1; d <= maxd; ++d) {
      Int expect = orbits[d - 1] - (d == 1 ? 1 : 0);  // P removed
      CHECK(Int(reps[d - 1].size()) == expect);
    }
  }
  auto r2 = trig5::sieve::orbit_reps(2, 9);
  std::vector<std::size_t> got2;
  for (auto& v : r2) got2.push_back(v.size());
  CHECK(got2 == std::vector<std::size_t>{6, 7, 22, 63, 210, 679, 2358, 8190, 29176});
  auto r3 = trig5::sieve::orbit_reps(3, 5);
  std::vector<std::size_t> got3;
  for (auto& v : r3) got3.push_back(v.size());
  CHECK(got3 == std::vector<std::size_t>{12, 39, 248, 1638, 11856});
}

TEST_CASE("orbits are disjoint, exact-degree, and cover all points") {
  for (std::uint32_t q : {2u, 3u}) {
    for (std::uint32_t d = 2; d <= 3; ++d) {
      trig5::ff::Field K = trig5::ff::Field::make(q, 1, d);
      auto reps = trig5::sieve::orbit_reps(q, d);
      std::vector<ProjPoint> seen;
      for (const auto& rep : reps[d - 1]) {
        CHECK(trig5::plane::point_exact_degree(K, rep.point) == d);
        ProjPoint r = rep.point;
        for (std::uint32_t k = 0; k < d; ++k) {
          seen.push_back(r);
          r = trig5::plane::normalize(K, trig5::plane::frobenius_point(K, r));
        }
        CHECK(r == rep.point);  // closes up after exactly d steps
      }
      std::size_t expect = 0;  // exact-degree-d points counted directly
      trig5::plane::enumerate_points(K, true, [&](ProjPoint pt) {
        expect += trig5::plane::point_exact_degree(K, pt) == d;
      });
      CHECK(seen.size() == expect);
      std::sort(seen.begin(), seen.end(), [](const ProjPoint& a, const ProjPoint& b) {
        return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
      });
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
  }
}

TEST_CASE("linear-system counts against direct enumeration, q=2") {
  auto ctx = FamilyContext::make(2);
  trig5::sieve::Engine eng(ctx, 5);

  for (Family fam : {Family::Split, Family::NonSplit, Family::Cusp}) {
    CHECK(eng.count_solutions(fam, {}) ==
          brute_count(ctx, fam, {}));  // family size itself
    for (std::uint32_t d : {1u, 2u}) {
      for (std::size_t i = 0; i < eng.rep_count(d); ++i) {
        std::uint64_t lin = eng.count_solutions(fam, {{d, i}});
        std::uint64_t dir = brute_count(ctx, fam, {{d, eng.reps(d)[i].point}});
        CHECK(lin == dir);
      }
    }
  }
  // a few two-orbit selections, including degenerate ones
  for (Family fam : {Family::Split, Family::NonSplit, Family::Cusp}) {
    for (Sel sel : {Sel{{1, 0}, {1, 3}}, Sel{{1, 4}, {1, 5}}, Sel{{1, 2}, {2, 0}},
                    Sel{{2, 1}, {2, 2}}}) {
      std::vector<std::pair<std::uint32_t, ProjPoint>> pts;
      for (auto [d, i] : sel) pts.emplace_back(d, eng.reps(d)[i].point);
      CHECK(eng.count_solutions(fam, sel) == brute_count(ctx, fam, pts));
    }
  }
  CHECK_THROWS_AS(eng.count_solutions(Family::Split, {{1, 0}, {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eng.reps(0), std::out_of_range);
  CHECK_THROWS_AS(eng.reps(6), std::out_of_range);
}

TEST_CASE("known configuration counts, q=2") {
  auto ctx = FamilyContext::make(2);
  trig5::sieve::Engine eng(ctx, 5);
  trig5::ff::Field K1 = trig5::ff::Field::make(2, 1, 1);
  trig5::ff::Field K2 = trig5::ff::Field::make(2, 1, 2);

  auto rep1 = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    return find_rep(eng, K1, 1, ProjPoint{x, y, z});
  };

  // empty configuration = family size
  CHECK(eng.count_solutions(Family::Split, {}) == 32768);
  CHECK(eng.count_solutions(Family::Cusp, {}) == 32768 - 16384);

  // one node in general position: three independent conditions
  CHECK(eng.count_solutions(Family::Split, {{1, rep1(1, 1, 1)}}) == 4096);

  // two extra nodes on the tangent line x=0 of the split cone: 2^10
  Sel on_x = {{1, rep1(0, 1, 0)}, {1, rep1(0, 1, 1)}};
  CHECK(eng.count_solutions(Family::Split, on_x) == 1024);

  // ... plus one node off that line: 2^7
  Sel on_x_plus = on_x;
  on_x_plus.emplace_back(1, rep1(1, 1, 1));
  CHECK(eng.count_solutions(Family::Split, on_x_plus) == 128);

  // two nodes on a line through P that is not a tangent of the cone: empty
  Sel diag = {{1, rep1(1, 1, 0)}, {1, rep1(1, 1, 1)}};
  CHECK(eng.count_solutions(Family::Split, diag) == 0);

  // cusp: two extra singular points on any line through P: empty
  CHECK(eng.count_solutions(Family::Cusp, on_x) == 0);
  Sel on_y = {{1, rep1(1, 0, 0)}, {1, rep1(1, 0, 1)}};
  CHECK(eng.count_solutions(Family::Cusp, on_y) == 0);

  // three rational points of the line z=0 (not through P): general position
  Sel z_line = {{1, rep1(1, 0, 0)}, {1, rep1(0, 1, 0)}, {1, rep1(1, 1, 0)}};
  CHECK(eng.count_solutions(Family::Split, z_line) == 64);

  // nonsplit cone x^2+xy+y^2 = (x+ty)(x+t^2 y) over GF(4), t = theta:
  // one conjugate pair on the tangent pair with z=0, another with z=1 -> 2^5
  trig5::ff::Elem th = K2.theta();
  Sel tangent_pairs = {
      {2, find_rep(eng, K2, 2, ProjPoint{th, 1, 0})},
      {2, find_rep(eng, K2, 2, ProjPoint{th, 1, 1})}};
  CHECK(eng.count_solutions(Family::NonSplit, tangent_pairs) == 32);
  // for the split cone those same lines through P are non-tangent: empty
  CHECK(eng.count_solutions(Family::Split, tangent_pairs) == 0);
}

TEST_CASE("known configuration counts, q=3") {
  auto ctx = FamilyContext::make(3);
  trig5::sieve::Engine eng(ctx, 2);
  trig5::ff::Field K1 = trig5::ff::Field::make(3, 1, 1);
  auto rep1 = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    return find_rep(eng, K1, 1, ProjPoint{x, y, z});
  };

  // two nodes on a non-tangent line through P: empty for every family
  Sel diag = {{1, rep1(1, 1, 0)}, {1, rep1(1, 1, 1)}};
  for (Family fam : {Family::Split, Family::NonSplit, Family::Cusp})
    CHECK(eng.count_solutions(fam, diag) == 0);

  // three extra nodes on the tangent line x=0: the line splits off, 3^9
  Sel three_on_x = {{1, rep1(0, 1, 0)}, {1, rep1(0, 1, 1)}, {1, rep1(0, 1, 2)}};
  CHECK(eng.count_solutions(Family::Split, three_on_x) == 19683);

  // all four points of the line z=0: quintic = line * quartic
  Sel z_line = {{1, rep1(1, 0, 0)},
                {1, rep1(0, 1, 0)},
                {1, rep1(1, 1, 0)},
                {1, rep1(1, 2, 0)}};
  CHECK(eng.count_solutions(Family::Split, z_line) == 243);
  CHECK(eng.count_solutions(Family::Cusp, z_line) == 243 - 81);
}

TEST_CASE("signed sums reproduce the closed-form numerators") {
  for (std::uint32_t q : {2u, 3u}) {
    auto ctx = FamilyContext::make(q);
    trig5::sieve::Engine eng(ctx, 5);
    for (Family fam : {Family::Split, Family::NonSplit, Family::Cusp}) {
      auto rep = trig5::sieve::run_sums(eng, fam);
      CHECK(rep.matches_numerator);
      CHECK(rep.total == trig5::symbolic::sieve_numerator(fam).eval_int(q));
      CHECK(rep.per_weight.size() == 6);
      CHECK(rep.per_weight[0] == Int(trig5::plane::family_size(fam, q)));
      // corrections cancel within each weight: the signed sum over the
      // configurations of weight w equals pi_w(P^2-P) * general-position count
      for (std::uint32_t w = 0; w <= 5; ++w) {
        Int expect = (trig5::symbolic::zeta_inverse_pi(2, true, w) *
                      trig5::symbolic::family_affine_count(fam, w))
                         .eval_int(q);
        CHECK(rep.per_weight[w] == expect);
      }
    }
    // totals frozen from the closed forms
    if (q == 2) {
      CHECK(trig5::sieve::run_sums(eng, Family::Split).total == 12288);
      CHECK(trig5::sieve::run_sums(eng, Family::NonSplit).total == 12288);
      CHECK(trig5::sieve::run_sums(eng, Family::Cusp).total == 6144);
    } else {
      CHECK(trig5::sieve::run_sums(eng, Family::Split).total == 8503056);
      CHECK(trig5::sieve::run_sums(eng, Family::NonSplit).total == 8503056);
      CHECK(trig5::sieve::run_sums(eng, Family::Cusp).total == 5668704);
    }
  }
}

TEST_CASE("sieve totals feed the main theorem") {
  // numerator / stabilizer evaluated at q equals the closed form at q
  for (std::uint32_t q : {2u, 3u}) {
    Int total = 0;
    auto ctx = FamilyContext::make(q);
    trig5::sieve::Engine eng(ctx, 5);
    for (Family fam : {Family::Split, Family::NonSplit, Family::Cusp}) {
      Int num = trig5::sieve::run_sums(eng, fam).total;
      Int stab = trig5::symbolic::stabilizer_order(fam).eval_int(q);
      CHECK(num % stab == 0);
      total += num / stab;
    }
    Int theorem = trig5::symbolic::main_theorem(trig5::symbolic::QPoly::constant(1))
                      .eval_int(q);
    CHECK(total + 1 == theorem);
  }
}
