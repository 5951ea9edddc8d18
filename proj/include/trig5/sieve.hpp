#pragma once

#include <cstdint>
#include <vector>

#include "trig5/combinat.hpp"
#include "trig5/ff.hpp"
#include "trig5/plane.hpp"

namespace trig5::sieve {

// One Frobenius orbit of closed points of P^2 - P, identified by its
// first-in-enumeration-order representative over F_{q^degree}.
struct OrbitRep {
  plane::ProjPoint point;  // coordinates as elements of F_{q^degree}
  std::uint32_t degree = 0;
};

// Representatives of all closed points of exact degree d, 1 <= d <= max_degree,
// of P^2 - {(0:0:1)}, grouped by degree (index d-1).  Deterministic order.
std::vector<std::vector<OrbitRep>> orbit_reps(std::uint32_t q,
                                              std::uint32_t max_degree);

// Linear-condition engine: counts members of a singular-quintic family that
// are additionally singular along a chosen set of closed points.
class Engine {
 public:
  Engine(plane::FamilyContext ctx, std::uint32_t max_degree = 5);

  const plane::FamilyContext& context() const { return ctx_; }
  std::uint32_t max_degree() const { return max_degree_; }
  const std::vector<OrbitRep>& reps(std::uint32_t degree) const;
  std::size_t rep_count(std::uint32_t degree) const;

  // Number of family members singular at every geometric point of each chosen
  // orbit (on top of the built-in singularity at P).  The selection lists
  // (degree, index into reps(degree)) pairs; repeats are not allowed.
  std::uint64_t count_solutions(
      plane::Family family,
      const std::vector<std::pair<std::uint32_t, std::size_t>>& sel) const;

  // Signed sum over all tuples of distinct closed points with degree profile
  // summing to w:  sum_{|lambda|=w} (-1)^{#lambda} sum_S |C_family(S)|.
  combinat::Int signed_sum(plane::Family family, std::uint32_t w) const;

 private:
  struct RepRows {
    // 3*degree Weil-restriction rows over F_p; 15 free-coefficient columns
    // plus one right-hand-side column per family.
    std::vector<std::uint8_t> a;                     // 3d x 15, row-major
    std::array<std::vector<std::uint8_t>, 3> rhs;    // 3d each, by family
    std::uint32_t degree = 0;
  };

  std::uint64_t count_with_rows_(
      plane::Family family,
      const std::vector<std::pair<std::uint32_t, std::size_t>>& sel,
      bool force_zero_x3z2) const;

  plane::FamilyContext ctx_;
  std::uint32_t max_degree_;
  std::vector<std::vector<OrbitRep>> reps_;
  std::vector<std::vector<RepRows>> rows_;  // parallel to reps_
};

// Per-weight signed sums and their comparison with the closed-form numerator
// sum_w pi_w(P^2-P) * q^(15-3w) evaluated at q.
struct SumReport {
  plane::Family family = plane::Family::Split;
  std::uint32_t q = 0;
  std::vector<combinat::Int> per_weight;  // w = 0..5
  combinat::Int total = 0;
  combinat::Int numerator_value = 0;      // closed form evaluated at q
  bool matches_numerator = false;
};

SumReport run_sums(Engine& engine, plane::Family family);

}  // namespace trig5::sieve
