#pragma once
// Plane quintics with an ordinary double point or cusp at P = (0:0:1),
// coefficient indexing, and point enumeration over extensions of F_q.
//
// Monomials x^a y^b z^c, a+b+c = 5, are ordered by descending lex on
// (a, b); a quintic is the coefficient vector in that order.  Vanishing of
// the z^5, x z^4, y z^4 coefficients is multiplicity >= 2 at P, and the
// z^3 coefficients (x^2 z^3, x y z^3, y^2 z^3) form the tangent cone:
//   Split     (0, 1, 0)   cone x*y, two rational tangents
//   NonSplit  (1, t, n)   cone irreducible over F_q, t/n from GF(q^2)
//   Cusp      (0, 0, 1)   cone y^2, plus coeff(x^3 z^2) != 0

#include <array>
#include <cstdint>
#include <string>

#include "trig5/ff.hpp"

namespace trig5::plane {

enum class Family { Split, NonSplit, Cusp };
const char* family_name(Family f);
Family family_from_name(const std::string& s);

struct Monomial {
  std::uint8_t a, b, c;
};
inline constexpr std::array<Monomial, 21> kMonomials = [] {
  std::array<Monomial, 21> m{};
  int k = 0;
  for (int a = 5; a >= 0; --a)
    for (int b = 5 - a; b >= 0; --b) m[k++] = {(std::uint8_t)a, (std::uint8_t)b,
                                               (std::uint8_t)(5 - a - b)};
  return m;
}();
int monomial_index(int a, int b);
std::string monomial_name(int i);

inline constexpr int kCoefX2Z3 = 9, kCoefXYZ3 = 13, kCoefY2Z3 = 18;
inline constexpr int kCoefX3Z2 = 5, kCoefXZ4 = 14, kCoefYZ4 = 19, kCoefZ5 = 20;
inline constexpr std::array<int, 15> kFreeCoeff = {0, 1, 2,  3,  4,  5,  6, 7,
                                                   8, 10, 11, 12, 15, 16, 17};

// coefficient vector over F_q, entries are packed field indices (< q)
struct QuinticForm {
  Family family;
  std::uint32_t q;
  std::array<std::uint8_t, 21> coef;
};

// q prime; NonSplit tangent data comes from the canonical GF(q^2)
struct FamilyContext {
  std::uint32_t q = 0;
  std::uint32_t t = 0, n = 0;  // base-field indices
  static FamilyContext make(std::uint32_t q);
};

std::uint64_t family_size(Family f, std::uint32_t q);
QuinticForm curve_from_index(const FamilyContext& ctx, Family f, std::uint64_t idx);
std::uint64_t index_of_curve(const FamilyContext& ctx, const QuinticForm& form);

struct ProjPoint {
  ff::Elem x, y, z;
  bool operator==(const ProjPoint&) const = default;
};

ProjPoint normalize(const ff::Field& F, ProjPoint pt);
ProjPoint frobenius_point(const ff::Field& F, ProjPoint pt);
// exact degree of the orbit of a normalized point under the q-Frobenius
std::uint32_t point_exact_degree(const ff::Field& F, ProjPoint pt);

// fixed order: (1:y:z) with y outer and z inner ascending by packed index,
// then (0:1:z), then (0:0:1); exclude_P drops the final (0:0:1)
template <class Fn>
void enumerate_points(const ff::Field& F, bool exclude_P, Fn&& fn) {
  std::uint64_t n = F.order();
  for (std::uint64_t y = 0; y < n; ++y)
    for (std::uint64_t z = 0; z < n; ++z) fn(ProjPoint{1, y, z});
  for (std::uint64_t z = 0; z < n; ++z) fn(ProjPoint{0, 1, z});
  if (!exclude_P) fn(ProjPoint{0, 0, 1});
}

// {f, df/dx, df/dy, df/dz} at pt, over any extension F of the coefficient
// field (coefficients embed as constants, valid for prime q)
std::array<ff::Elem, 4> eval_with_partials(const ff::Field& F, const QuinticForm& form,
                                           const ProjPoint& pt);
bool is_singular_at(const ff::Field& F, const QuinticForm& form, const ProjPoint& pt);

}  // namespace trig5::plane
