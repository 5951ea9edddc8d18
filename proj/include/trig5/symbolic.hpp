#pragma once
// Closed forms for the truncated sieve: pi_w of P^n and P^n - {point} as
// polynomials in q, general-position family counts, projective stabilizer
// orders of the three singularity types, and the assembled total.

#include <cstdint>

#include "trig5/plane.hpp"
#include "trig5/qpoly.hpp"

namespace trig5::symbolic {

using plane::Family;

// coefficient of t^w in 1/Z(X; t), X = P^n or P^n minus a rational point
QPoly zeta_inverse_pi(std::uint32_t n, bool minus_point, std::uint32_t w);

// |PGL_3 stabilizer of (P, tangent data)|:
//   split 2 q^2 (q-1)^2, nonsplit 2 (q^4 - q^2), cusp q^3 (q-1)^2
QPoly stabilizer_order(Family f);
// exhaustive count of normalized invertible matrices satisfying the same
// conditions; nonsplit requires prime q
std::uint64_t stabilizer_brute_force(Family f, std::uint32_t q);

// |C_family(S)| for S of s points in general position
QPoly family_affine_count(Family f, std::uint32_t s);

// sum_w pi_w(P^2 - P) * family_affine_count(w), w = 0..5
QPoly sieve_numerator(Family f);
// numerator divided exactly by the stabilizer order
QPoly sieve_closed_form(Family f);

// sum of the three closed forms plus the explicitly listed remainder
QPoly main_theorem(const QPoly& explicit_part);

}  // namespace trig5::symbolic
