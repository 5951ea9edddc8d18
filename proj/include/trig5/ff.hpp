#pragma once
// Arithmetic in GF(p^m) with a designated base field F_q, q = p^s, s | m.
//
// An element with power-basis coordinates (c_0,...,c_{m-1}) over F_p is the
// packed index sum c_i * p^i, so indices are dense in [0, p^m).  Constants
// of F_p keep their value as indices.  Supported range: p^m <= 2^40;
// multiplication tables are only built for p^m <= 2^16, larger fields use
// schoolbook reduction.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trig5::ff {

using Elem = std::uint64_t;

struct FieldDesc {
  std::uint32_t p = 0;                 // prime characteristic
  std::uint32_t s = 0;                 // base field F_q, q = p^s
  std::uint32_t m = 0;                 // total degree over F_p, s | m
  std::vector<std::uint8_t> modulus;   // monic irreducible, coeffs c_0..c_m
};

class Field {
 public:
  // Canonical modulus: lexicographically smallest monic irreducible of
  // degree m over F_p, coefficients compared from the constant term up.
  static Field make(std::uint32_t p, std::uint32_t s, std::uint32_t m);
  static Field make_with_modulus(std::uint32_t p, std::uint32_t s,
                                 std::vector<std::uint8_t> modulus);

  const FieldDesc& desc() const { return d_; }
  std::uint32_t p() const { return d_.p; }
  std::uint32_t s() const { return d_.s; }
  std::uint32_t m() const { return d_.m; }
  std::uint64_t order() const { return order_; }       // p^m
  std::uint64_t base_order() const { return base_; }   // q = p^s

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // theta = residue class of the variable; generates the power basis
  Elem theta() const { return theta_; }

  Elem from_coeffs(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;            // throws on 0
  Elem pow(Elem a, std::uint64_t e) const;
  Elem scalar_mul(std::uint32_t k, Elem a) const;  // k in F_p

  // q-power Frobenius (generates Gal over the base field)
  Elem frobenius(Elem a) const;
  Elem frobenius_iter(Elem a, std::uint32_t k) const;
  bool in_base_field(Elem a) const;

  bool has_tables() const { return !alog_.empty(); }
  // valid only when has_tables(); log_[0] is unused
  const std::vector<std::uint16_t>& log_table() const { return log_; }
  const std::vector<std::uint16_t>& alog_table() const { return alog_; }

 private:
  Field() = default;
  void init();
  Elem mul_generic_(Elem a, Elem b) const;

  FieldDesc d_;
  std::uint64_t order_ = 0, base_ = 0;
  Elem theta_ = 0;
  std::vector<std::uint16_t> log_, alog_;  // p^m <= 2^16 only
  std::vector<std::uint16_t> frob_;        // tabulated frobenius, same bound
};

// t = alpha + alpha^q, n = alpha * alpha^q for alpha = theta of GF(q^2);
// x^2 - t x + n is the minimal polynomial of alpha over F_q and is
// irreducible there.  Values are packed indices of the base field.
struct QuadraticData {
  Elem alpha;
  Elem t, n;        // elements of GF(q^2) that lie in F_q
  std::uint32_t t_base, n_base;  // same values as base-field indices (s = 1)
};
QuadraticData quadratic_data(const Field& k2);

// Addition of packed base-3 indices without carries, table-backed.
const std::uint16_t* add3_block_table();  // 243 x 243, row-major
inline Elem add3(Elem a, Elem b, const std::uint16_t* t) {
  Elem r = 0, pw = 1;
  while (a | b) {
    r += pw * t[(a % 243) * 243 + (b % 243)];
    a /= 243;
    b /= 243;
    pw *= 243;
  }
  return r;
}

}  // namespace trig5::ff
