#include <doctest.h>

#include "trig5/combinat.hpp"

using namespace trig5::combinat;

TEST_CASE("partition basics") {
  Partition p{{1, 3}, {2, 2}};
  CHECK(weight(p) == 7);
  CHECK(part_count(p) == 5);
  CHECK(to_string(p) == "[1^3,2^2]");
  CHECK(to_string({}) == "[]");
  CHECK(mult_of(p, 2) == 2);
  CHECK(mult_of(p, 5) == 0);
  CHECK(from_mults({3, 2, 0}) == p);
  CHECK(append_node({}) == Partition{{1, 1}});
  CHECK(append_node({{2, 1}}) == Partition{{1, 1}, {2, 1}});
  CHECK(append_node(p) == Partition{{1, 4}, {2, 2}});
}

TEST_CASE("partition generation counts match the partition function") {
  const std::uint32_t expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  std::uint32_t total = 0;
  for (std::uint32_t w = 0; w <= 12; ++w) {
    auto v = partitions_of_weight(w);
    CHECK(v.size() == expect[w]);
    total += (std::uint32_t)v.size();
    for (auto& lam : v) CHECK(weight(lam) == w);
  }
  CHECK(total == 272);
  CHECK(partitions_up_to(12).size() == 272);
}

TEST_CASE("subpartitions enumerate boxes under the bound") {
  Partition lam{{2, 2}, {3, 1}};
  CHECK(subpartitions(lam, 100).size() == 6);
  CHECK(subpartitions(lam, 4).size() == 4);  // [], [2], [2^2], [3]
  CHECK(subpartitions({}, 5).size() == 1);
}

TEST_CASE("binomials") {
  CHECK(binom(7, 2) == 21);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(60, 30) == Int("118264581564861424"));
}

TEST_CASE("sigma_5 vanishes on nonempty partitions of weight <= 5") {
  for (std::uint32_t w = 1; w <= 5; ++w)
    for (auto& lam : partitions_of_weight(w)) {
      CAPTURE(to_string(lam));
      CHECK(sigma(lam) == 0);
    }
}

TEST_CASE("sigma_5 spot values from the definition") {
  CHECK(sigma({}) == -1);
  CHECK(sigma({{6, 1}}) == -1);
  CHECK(sigma({{1, 1}, {6, 1}}) == 0);
  CHECK(sigma({{2, 3}}) == -1);   // 6 = 2+2+2
  CHECK(sigma({{7, 1}}) == -1);
  CHECK(sigma({{1, 2}, {7, 1}}) == 0);
}

TEST_CASE("sigma complement form for nonempty partitions up to weight 12") {
  for (std::uint32_t w = 1; w <= 12; ++w)
    for (auto& lam : partitions_of_weight(w)) {
      Int alt = 0;
      std::uint64_t cut = w > 5 ? w - 5 : 0;  // |mu| < |lambda| - 5
      for (auto& mu : subpartitions(lam, cut ? cut - 1 : 0)) {
        if (cut == 0) break;
        Int term = 1;
        for (auto [part, mult] : mu) term *= binom(mult_of(lam, part), mult);
        alt += (part_count(mu) % 2 ? -term : term);
      }
      if (part_count(lam) % 2) alt = -alt;
      CAPTURE(to_string(lam));
      CHECK(sigma(lam) == alt);
    }
}

TEST_CASE("sigma depends only on multiplicities of parts 1..5") {
  for (std::uint32_t w = 6; w <= 9; ++w)
    for (auto& lam : partitions_of_weight(w)) {
      std::array<std::uint64_t, 5> m{};
      for (auto [part, mult] : lam)
        if (part <= 5) m[part - 1] = mult;
      CAPTURE(to_string(lam));
      CHECK(sigma_truncated(m) == sigma(lam));
    }
}

TEST_CASE("mobius orbit counts: projective line and plane over F_2") {
  CHECK(mobius_orbit_counts({3, 5, 9}) == std::vector<Int>{3, 1, 2});
  CHECK(mobius_orbit_counts({7, 21}) == std::vector<Int>{7, 7});
  CHECK_THROWS_AS(mobius_orbit_counts({2, 3}), std::domain_error);
  CHECK_THROWS_AS(mobius_orbit_counts({3, 1}), std::domain_error);
}

TEST_CASE("tuple counts over P^2(F_2)") {
  std::vector<Int> N{7, 21};
  CHECK(tuple_count(N, {}) == 1);
  CHECK(tuple_count(N, {{1, 2}}) == 21);
  CHECK(tuple_count(N, {{1, 1}, {2, 1}}) == 49);
  CHECK(tuple_count(N, {{2, 8}}) == 0);  // only 7 conjugate pairs exist
}

static std::vector<Int> plane_counts(std::uint64_t q, int depth, bool minus_point) {
  std::vector<Int> N(depth);
  Int qq = q;
  for (int r = 1; r <= depth; ++r) {
    Int qr = 1;
    for (int i = 0; i < r; ++i) qr *= qq;
    N[r - 1] = qr * qr + qr + 1 - (minus_point ? 1 : 0);
  }
  return N;
}

TEST_CASE("pi_w of the plane matches the zeta expansion") {
  for (std::uint64_t q : {2ull, 3ull}) {
    auto N = plane_counts(q, 8, false);
    Int q2 = Int(q) * q, q3 = q2 * q;
    CHECK(pi_w(N, 0) == 1);
    CHECK(pi_w(N, 1) == -(1 + Int(q) + q2));
    CHECK(pi_w(N, 2) == Int(q) + q2 + q3);
    CHECK(pi_w(N, 3) == -q3);
    Int total = 0;
    for (std::uint32_t w = 0; w <= 8; ++w) {
      if (w >= 4) CHECK(pi_w(N, w) == 0);
      total += pi_w(N, w);
    }
    CHECK(total == 0);

    auto M = plane_counts(q, 8, true);
    CHECK(pi_w(M, 0) == 1);
    CHECK(pi_w(M, 1) == -(Int(q) + q2));
    CHECK(pi_w(M, 2) == q3);
    Int total2 = 0;
    for (std::uint32_t w = 0; w <= 8; ++w) {
      if (w >= 3) CHECK(pi_w(M, w) == 0);
      total2 += pi_w(M, w);
    }
    // 1/Z(P^2 - P; t) = (1 - qt)(1 - q^2 t) evaluated at t = 1
    CHECK(total2 == (1 - Int(q)) * (1 - q2));
  }
}

TEST_CASE("signed tuple sums") {
  CHECK(signed_tuple_sum({2, 1}, 2) == 0);  // C(2,2) - C(1,1)
  CHECK(signed_tuple_sum({0, 0, 0}, 1) == 0);
  CHECK(signed_tuple_sum({3}, 1) == -3);
  CHECK(signed_tuple_sum({}, 0) == 1);
}
