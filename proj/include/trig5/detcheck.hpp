#pragma once
// Determinant identities behind the general-position counts.  Each case
// builds the interpolation matrix of linear conditions on curve
// coefficients at parameterized points and compares its determinant with
// a factored target, up to one global sign per case:
//
//   genpos5  15x15  quintics with assigned nodes at five points
//   lines    4x4    cubics through four collinear-parameter points
//   cusp4    12x12  quintics with nodes at four points, cuspidal column set
//
// Both sides are evaluated over Z/p for three 31-bit primes on the grid
// {0..15}^k.  Every per-variable degree is at most 15, so agreement on the
// full grid for a fixed prime means the two polynomials agree mod p;
// agreement for all three primes pins the integer identity for all
// coefficients below ~2^93.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace trig5::detcheck {

enum class Case { GenPos5, Lines, Cusp4 };
const char* case_name(Case c);
Case case_from_name(const std::string& s);
int active_vars(Case c);  // alpha..delta prefix length

inline constexpr std::array<std::uint64_t, 3> kPrimes = {2147483647ull, 2147483629ull,
                                                         2147483587ull};

using Vars = std::array<std::uint64_t, 4>;  // alpha, beta, gamma, delta
using Matrix = std::vector<std::vector<std::uint64_t>>;

Matrix build_matrix(Case c, const Vars& v, std::uint64_t p);
std::uint64_t target_value(Case c, const Vars& v, std::uint64_t p);

std::uint64_t det_gauss(Matrix m, std::uint64_t p);
std::uint64_t det_cofactor(const Matrix& m, std::uint64_t p);

struct GridReport {
  Case c;
  std::uint64_t prime = 0;
  int sign = 0;  // +1 / -1 once established, 0 if target never nonzero
  std::uint64_t grid_points = 0;
  std::uint64_t mismatches = 0;
};

GridReport verify_identity_mod(Case c, std::uint64_t prime);
std::vector<GridReport> verify_identity(Case c);  // all primes of kPrimes

}  // namespace trig5::detcheck
