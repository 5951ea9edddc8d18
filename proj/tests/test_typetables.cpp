#include <doctest.h>

#include <set>

#include "trig5/typetables.hpp"

using namespace trig5;
using namespace trig5::typetables;

TEST_CASE("embedded table loads, validates, and has 98 rows") {
  const TableDoc& doc = embedded();
  CHECK(doc.format == "trig5-typetables-v1");
  CHECK(doc.rows.size() == 98);
  std::set<std::string> ids;
  for (auto& r : doc.rows) ids.insert(r.id);
  CHECK(ids.size() == 98);
}

TEST_CASE("both characteristic columns sum to exactly 1") {
  const auto& rows = embedded().rows;
  CHECK(table_total(rows, false) == symbolic::QPoly::constant(1));
  CHECK(table_total(rows, true) == symbolic::QPoly::constant(1));
}

TEST_CASE("only the two tangent-conic sections depend on the characteristic") {
  auto diff = section_char_difference(embedded().rows);
  for (auto& [section, d] : diff) {
    CAPTURE(section);
    if (section == "conic-three-lines-two-tangent")
      CHECK(d == symbolic::QPoly::constant(-1));
    else if (section == "conic-three-lines-one-tangent")
      CHECK(d == symbolic::QPoly::constant(1));
    else
      CHECK(d.is_zero());
  }
}

TEST_CASE("row counts scale |PGL_3| to nonnegative integers") {
  for (auto& row : embedded().rows)
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
      CAPTURE(row.id);
      CAPTURE(q);
      CHECK(integrality_check(row, q));
    }
}

TEST_CASE("spot row: five rational lines in general position") {
  const auto& r = embedded().rows.front();
  CHECK(r.id == "five-lines-general-01");
  CHECK(r.lambda == combinat::Partition{{1, 9}});
  CHECK(r.points == combinat::Partition{{1, 10}});
  CHECK(r.sigma == 56);
  CHECK(r.delta == 10);
  CHECK(!r.two_column);
  // 10 * 56 * poly has degree 2 (the type has a 2-parameter moduli)
  CHECK(r.poly_odd.degree() == 2);
}

TEST_CASE("fault injection: checksum catches text-level corruption") {
  std::string text = embedded_json();
  auto pos = text.find("dfd70ee3de8c2603");
  REQUIRE(pos != std::string::npos);
  std::string bad = text;
  bad[pos] = bad[pos] == '0' ? '1' : '0';
  CHECK_THROWS_WITH_AS(parse(bad), doctest::Contains("checksum"), std::runtime_error);
  // corrupt a payload byte instead: checksum must also fail
  auto dpos = text.find("\"sigma\"");
  REQUIRE(dpos != std::string::npos);
  std::string bad2 = text;
  // find the digit after "sigma": and flip it
  while (bad2[dpos] != ':') ++dpos;
  while (!isdigit((unsigned char)bad2[dpos]) && bad2[dpos] != '-') ++dpos;
  if (bad2[dpos] == '-') ++dpos;
  bad2[dpos] = bad2[dpos] == '9' ? '8' : (char)(bad2[dpos] + 1);
  CHECK_THROWS_WITH_AS(parse(bad2), doctest::Contains("checksum"), std::runtime_error);
}

TEST_CASE("fault injection: semantic validation names the corrupted row") {
  TableDoc doc = embedded();
  doc.rows[7].sigma += 1;
  CHECK_THROWS_WITH_AS(validate(doc), doctest::Contains(doc.rows[7].id.c_str()),
                       std::runtime_error);
  TableDoc doc2 = embedded();
  doc2.rows[3].points = doc2.rows[3].lambda;  // drop the marked node
  CHECK_THROWS_WITH_AS(validate(doc2), doctest::Contains(doc2.rows[3].id.c_str()),
                       std::runtime_error);
  TableDoc doc3 = embedded();
  doc3.rows[0].delta = 99;
  CHECK_THROWS_WITH_AS(validate(doc3), doctest::Contains("delta"), std::runtime_error);
}

TEST_CASE("sigma values stored in the table match recomputation") {
  for (auto& row : embedded().rows) {
    CAPTURE(row.id);
    CHECK(combinat::sigma(row.lambda) == row.sigma);
    std::uint64_t w = combinat::weight(row.lambda);
    CHECK(w >= 6);
    CHECK(w <= 9);
  }
}
