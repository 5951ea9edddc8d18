#include <doctest.h>

#include "trig5/combinat.hpp"
#include "trig5/symbolic.hpp"

using namespace trig5;
using namespace trig5::symbolic;

static QPoly Q(std::int64_t e) { return QPoly::q_pow(e); }

TEST_CASE("qpoly arithmetic and division") {
  QPoly a = Q(2) - QPoly::constant(1);     // q^2 - 1
  QPoly b = Q(1) + QPoly::constant(1);     // q + 1
  CHECK(a.exact_div(b) == Q(1) - QPoly::constant(1));
  CHECK((a * b).degree() == 3);
  CHECK(a.exact_div(Q(1)) == Q(1) - Q(-1));  // Laurent quotient
  CHECK(Q(2).exact_div(Q(5)) == Q(-3));
  CHECK_THROWS_AS((Q(2) + QPoly::constant(1)).exact_div(b), std::domain_error);
  CHECK(a.eval_int(3) == 8);
  QPoly half = Q(1).exact_div(QPoly::constant(2));
  CHECK(half.eval(Rat(3)) == Rat(3, 2));
  CHECK_THROWS_AS(half.eval_int(3), std::domain_error);
  CHECK(half.eval_int(4) == 2);
  CHECK(QPoly::from_triples(a.triples()) == a);
  CHECK((Q(11) + Q(10) - Q(8) + QPoly::constant(1)).to_string() ==
        "q^11 + q^10 - q^8 + 1");
  CHECK((half * QPoly::constant(2)).integer_coeffs());
  CHECK(!half.integer_coeffs());
}

TEST_CASE("pi_w as polynomials match direct tuple sums at q = 2 and 3") {
  for (std::uint32_t n : {1u, 2u}) {
    for (bool minus : {false, true}) {
      for (std::uint64_t q : {2ull, 3ull}) {
        std::vector<combinat::Int> N(8);
        for (int r = 1; r <= 8; ++r) {
          combinat::Int v = 0, qr = 1;
          for (int i = 0; i < r; ++i) qr *= q;
          combinat::Int t = 1;
          for (std::uint32_t i = 0; i <= n; ++i) {
            v += t;
            t *= qr;
          }
          N[r - 1] = v - (minus ? 1 : 0);
        }
        for (std::uint32_t w = 0; w <= 6; ++w) {
          CAPTURE(n);
          CAPTURE(minus);
          CAPTURE(w);
          CHECK(zeta_inverse_pi(n, minus, w).eval_int(q) == combinat::pi_w(N, w));
        }
      }
    }
  }
}

TEST_CASE("pi_w vanishing thresholds and full-space total") {
  for (std::uint32_t w = 4; w <= 9; ++w) CHECK(zeta_inverse_pi(2, false, w).is_zero());
  for (std::uint32_t w = 3; w <= 9; ++w) CHECK(zeta_inverse_pi(2, true, w).is_zero());
  for (std::uint32_t w = 3; w <= 9; ++w) CHECK(zeta_inverse_pi(1, false, w).is_zero());
  for (std::uint32_t w = 2; w <= 9; ++w) CHECK(zeta_inverse_pi(1, true, w).is_zero());
  for (std::uint32_t n : {1u, 2u}) {
    QPoly total;
    for (std::uint32_t w = 0; w <= n + 1; ++w) total += zeta_inverse_pi(n, false, w);
    CHECK(total.is_zero());
  }
}

TEST_CASE("stabilizer orders: closed form vs exhaustive PGL_3 count") {
  CHECK(stabilizer_order(Family::Split).eval_int(2) == 8);
  CHECK(stabilizer_order(Family::NonSplit).eval_int(2) == 24);
  CHECK(stabilizer_order(Family::Cusp).eval_int(2) == 8);
  CHECK(stabilizer_order(Family::Split).eval_int(3) == 72);
  CHECK(stabilizer_order(Family::NonSplit).eval_int(3) == 144);
  CHECK(stabilizer_order(Family::Cusp).eval_int(3) == 108);
  for (std::uint32_t q : {2u, 3u}) {
    for (Family f : {Family::Split, Family::NonSplit, Family::Cusp}) {
      CAPTURE(q);
      CHECK(stabilizer_brute_force(f, q) ==
            (std::uint64_t)stabilizer_order(f).eval_int(q));
    }
  }
  // prime power and a larger prime, spot checks
  CHECK(stabilizer_brute_force(Family::Split, 4) ==
        (std::uint64_t)stabilizer_order(Family::Split).eval_int(4));
  CHECK(stabilizer_brute_force(Family::Cusp, 4) ==
        (std::uint64_t)stabilizer_order(Family::Cusp).eval_int(4));
  CHECK(stabilizer_brute_force(Family::NonSplit, 5) ==
        (std::uint64_t)stabilizer_order(Family::NonSplit).eval_int(5));
  CHECK_THROWS_AS(stabilizer_brute_force(Family::NonSplit, 4), std::invalid_argument);
}

TEST_CASE("sieve numerators before division") {
  QPoly expect_split = Q(15) - Q(14) - Q(13) + Q(12);
  CHECK(sieve_numerator(Family::Split) == expect_split);
  CHECK(sieve_numerator(Family::NonSplit) == expect_split);
  CHECK(sieve_numerator(Family::Cusp) == Q(15) - Q(14) * QPoly::constant(2) + Q(12) * QPoly::constant(2) - Q(11));
}

TEST_CASE("closed forms divide exactly") {
  QPoly half = QPoly::constant(Rat(1, 2));
  CHECK(sieve_closed_form(Family::Split) == half * (Q(11) + Q(10)));
  CHECK(sieve_closed_form(Family::NonSplit) == half * (Q(11) - Q(10)));
  CHECK(sieve_closed_form(Family::Cusp) == Q(10) - Q(8));
}

TEST_CASE("main theorem assembles to q^11 + q^10 - q^8 + 1") {
  QPoly total = main_theorem(QPoly::constant(1));
  CHECK(total == Q(11) + Q(10) - Q(8) + QPoly::constant(1));
  CHECK(total.integer_coeffs());
  CHECK(total.eval_int(2) == 2817);
  CHECK(total.eval_int(3) == 229636);
  CHECK(total.eval_int(1) == 2);
  CHECK(total.to_string() == "q^11 + q^10 - q^8 + 1");
}

TEST_CASE("general position family counts") {
  CHECK(family_affine_count(Family::Split, 0) == Q(15));
  CHECK(family_affine_count(Family::NonSplit, 1) == Q(12));
  CHECK(family_affine_count(Family::Cusp, 0) == Q(15) - Q(14));
  CHECK(family_affine_count(Family::Cusp, 2).eval_int(2) == 2u * 256 - 256);
  CHECK_THROWS_AS(family_affine_count(Family::Split, 6), std::invalid_argument);
}
