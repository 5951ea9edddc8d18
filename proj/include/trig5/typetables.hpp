#pragma once
// Embedded classification of reducible/non-reduced quintic types with a
// marked node P.  Each row is a curve type: lambda is the partition of the
// singular points other than P (6 <= |lambda| <= 9), points is lambda with
// P appended, sigma = sigma_5(lambda), delta is the number of rational
// ordinary nodes of the type that can serve as P, and poly is the count of
// such configurations divided by |PGL_3(F_q)|.  Types whose count depends
// on the parity of q carry separate odd/even columns.
//
// The resource is checksummed; every structural invariant is re-verified
// at load time so a corrupted table cannot be consumed silently.

#include <map>
#include <string>
#include <vector>

#include "trig5/combinat.hpp"
#include "trig5/qpoly.hpp"

namespace trig5::typetables {

struct TypeRow {
  std::string id, section, description;
  combinat::Partition lambda, points;
  long long sigma = 0;
  std::uint32_t delta = 0;
  bool two_column = false;
  symbolic::QPoly poly_odd, poly_even;  // equal when !two_column
  const symbolic::QPoly& poly_for(std::uint64_t q) const {
    return q % 2 ? poly_odd : poly_even;
  }
};

struct TableDoc {
  std::string format;
  std::string checksum_hex;
  std::vector<TypeRow> rows;
};

// parse + checksum + full validation; throws std::runtime_error naming the
// offending row on any mismatch
TableDoc parse(const std::string& json_text);
const TableDoc& embedded();
std::string embedded_json();

// recompute sigma/points/weight invariants (also run by parse)
void validate(const TableDoc& doc);

// sum over rows of sigma * delta * poly for one characteristic column
symbolic::QPoly table_total(const std::vector<TypeRow>& rows, bool even_char);

// poly(q) * |PGL_3(F_q)| must be a nonnegative integer
bool integrality_check(const TypeRow& row, std::uint64_t q);

// per-section sum of sigma * delta * (poly_odd - poly_even)
std::map<std::string, symbolic::QPoly> section_char_difference(
    const std::vector<TypeRow>& rows);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace trig5::typetables
