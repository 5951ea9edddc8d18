#include "trig5/typetables.hpp"

#include <json.hpp>
#include <stdexcept>

#include "typetables_data.hpp"

namespace trig5::typetables {

using nlohmann::json;
using symbolic::QPoly;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

combinat::Partition parse_partition(const json& j) {
  combinat::Partition p;
  for (auto& pm : j) p.push_back({pm.at(0).get<std::uint32_t>(), pm.at(1).get<std::uint32_t>()});
  return p;
}

QPoly parse_poly(const json& j) {
  std::vector<std::tuple<std::int64_t, symbolic::Int, symbolic::Int>> t;
  for (auto& term : j)
    t.emplace_back(term.at(0).get<std::int64_t>(),
                   symbolic::Int(term.at(1).get<long long>()),
                   symbolic::Int(term.at(2).get<long long>()));
  return QPoly::from_triples(t);
}

std::string hex64(std::uint64_t v) {
  static const char* d = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = d[v & 15];
    v >>= 4;
  }
  return s;
}

}  // namespace

TableDoc parse(const std::string& json_text) {
  json doc = json::parse(json_text);
  TableDoc t;
  t.format = doc.at("format").get<std::string>();
  if (t.format != "trig5-typetables-v1")
    throw std::runtime_error("typetables: unknown format " + t.format);
  t.checksum_hex = doc.at("checksum_fnv1a64").get<std::string>();
  // canonical serialization: compact separators, keys sorted (json uses an
  // ordered map, so dump() is already key-sorted)
  std::string canon = doc.at("rows").dump();
  if (hex64(fnv1a64(canon)) != t.checksum_hex)
    throw std::runtime_error("typetables: checksum mismatch, table corrupted");
  for (auto& r : doc.at("rows")) {
    TypeRow row;
    row.id = r.at("id").get<std::string>();
    row.section = r.at("section").get<std::string>();
    row.description = r.at("description").get<std::string>();
    row.lambda = parse_partition(r.at("lambda"));
    row.points = parse_partition(r.at("points"));
    row.sigma = r.at("sigma").get<long long>();
    row.delta = r.at("delta").get<std::uint32_t>();
    if (r.contains("poly")) {
      row.two_column = false;
      row.poly_odd = row.poly_even = parse_poly(r.at("poly"));
    } else {
      row.two_column = true;
      row.poly_odd = parse_poly(r.at("poly_odd"));
      row.poly_even = parse_poly(r.at("poly_even"));
    }
    t.rows.push_back(std::move(row));
  }
  validate(t);
  return t;
}

void validate(const TableDoc& doc) {
  for (const auto& row : doc.rows) {
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("typetables: row " + row.id + ": " + what);
    };
    std::uint64_t w = combinat::weight(row.lambda);
    if (w < 6 || w > 9) fail("lambda weight " + std::to_string(w) + " out of range");
    if (combinat::append_node(row.lambda) != row.points)
      fail("points is not lambda plus the marked node");
    if (combinat::sigma(row.lambda) != row.sigma)
      fail("stored sigma disagrees with sigma_5(lambda)");
    if (row.delta == 0 || row.delta > combinat::part_count(row.points))
      fail("delta outside 1..#points");
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull})
      if (!integrality_check(row, q))
        fail("count not a nonnegative integer at q = " + std::to_string(q));
  }
  if (doc.rows.size() != 98)
    throw std::runtime_error("typetables: expected 98 rows, found " +
                             std::to_string(doc.rows.size()));
}

const TableDoc& embedded() {
  static TableDoc doc = parse(detail::kEmbeddedJson);
  return doc;
}

std::string embedded_json() { return detail::kEmbeddedJson; }

QPoly table_total(const std::vector<TypeRow>& rows, bool even_char) {
  QPoly total;
  for (const auto& row : rows) {
    QPoly term = even_char ? row.poly_even : row.poly_odd;
    total += term * QPoly::constant(symbolic::Rat(row.sigma) * row.delta);
  }
  return total;
}

bool integrality_check(const TypeRow& row, std::uint64_t q) {
  // |PGL_3| = q^3 (q^3 - 1) (q^2 - 1)
  symbolic::Int qi = q;
  symbolic::Int pgl = qi * qi * qi * (qi * qi * qi - 1) * (qi * qi - 1);
  symbolic::Rat v = row.poly_for(q).eval(symbolic::Rat(qi)) * symbolic::Rat(pgl);
  return denominator(v) == 1 && v >= 0;
}

std::map<std::string, QPoly> section_char_difference(const std::vector<TypeRow>& rows) {
  std::map<std::string, QPoly> diff;
  for (const auto& row : rows)
    diff[row.section] +=
        (row.poly_odd - row.poly_even) *
        QPoly::constant(symbolic::Rat(row.sigma) * row.delta);
  return diff;
}

}  // namespace trig5::typetables
