#pragma once
// Partitions indexed by orbit degree, Mobius inversion of point counts,
// signed tuple sums pi_w, and the truncation coefficients sigma_N.
//
// A partition is stored as ascending (part, multiplicity) pairs with
// positive multiplicities.  In tuple language the multiplicity of part d
// is the number of distinct closed points of degree d in a configuration;
// the sign of a configuration is (-1)^(number of points).

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace trig5::combinat {

using Int = boost::multiprecision::cpp_int;
using Partition = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::uint64_t weight(const Partition& p);
std::uint32_t part_count(const Partition& p);  // number of points, with mult
std::uint32_t mult_of(const Partition& p, std::uint32_t part);
std::string to_string(const Partition& p);  // "[]", "[1^2,3^1]"
Partition from_mults(const std::vector<std::uint64_t>& m);  // m[d-1] = mult of d
Partition append_node(Partition p);  // one more degree-1 point

std::vector<Partition> partitions_of_weight(std::uint32_t w);
std::vector<Partition> partitions_up_to(std::uint32_t w);  // weights 0..w
// all mu <= lambda componentwise with |mu| <= bound
std::vector<Partition> subpartitions(const Partition& lambda, std::uint64_t bound);

Int binom(std::uint64_t n, std::uint64_t k);

// sigma_N(lambda) = -sum_{mu <= lambda, |mu| <= N} (-1)^#mu prod C(lambda_i, mu_i)
Int sigma(const Partition& lambda, std::uint32_t N = 5);
// same sum with C taken against available multiplicities m[0..4] of parts
// 1..5; equals sigma(lambda) whenever lambda has those low multiplicities
Int sigma_truncated(const std::array<std::uint64_t, 5>& m_low, std::uint32_t N = 5);

// sum over partitions lambda of weight w of (-1)^#lambda prod C(m_part, mult);
// m[d-1] = number of degree-d points available, parts beyond m give 0
Int signed_tuple_sum(const std::vector<Int>& m, std::uint32_t w);

// point counts N[r-1] = |X(F_{q^r})| --> orbit counts m[d-1]; throws if the
// sequence is not realizable (non-integral or negative result)
std::vector<Int> mobius_orbit_counts(const std::vector<Int>& N);
// prod C(m_i, lambda_i) for the orbit counts of N
Int tuple_count(const std::vector<Int>& N, const Partition& lambda);
// pi_w(X) = sum_{|lambda| = w} (-1)^#lambda |X(lambda)|
Int pi_w(const std::vector<Int>& N, std::uint32_t w);

}  // namespace trig5::combinat
