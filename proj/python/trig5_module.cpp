// Python bindings over the main operations.  Big integers cross the
// boundary as exact Python ints (through their decimal rendering); result
// documents cross as plain dicts built from the canonical JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "trig5/census.hpp"
#include "trig5/detcheck.hpp"
#include "trig5/plane.hpp"
#include "trig5/qpoly.hpp"
#include "trig5/sieve.hpp"
#include "trig5/symbolic.hpp"
#include "trig5/typetables.hpp"
#include "trig5/verify.hpp"

namespace py = pybind11;
using namespace trig5;
using combinat::Int;
using plane::Family;
using symbolic::QPoly;

namespace {

py::int_ big(const Int& v) {
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(v.str()));
}

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

QPoly theorem() {
  return symbolic::main_theorem(QPoly::constant(1));
}

census::Result run_one(census::Context& ctx, Family f, const std::string& strategy,
                       unsigned threads, std::uint64_t block,
                       const std::string& checkpoint) {
  census::RunOptions opt;
  opt.strategy = census::strategy_from_name(strategy);
  opt.threads = threads;
  opt.block_size = block;
  opt.checkpoint_path = checkpoint;
  return run_census(ctx, f, opt);
}

}  // namespace

PYBIND11_MODULE(trig5, m) {
  m.doc() = "exact count of smooth trigonal genus-5 curves over F_q";

  m.def("formula", [] { return theorem().to_string(); },
        "the closed formula as a string");
  m.def(
      "formula_value", [](std::uint64_t q) { return big(theorem().eval_int(q)); },
      py::arg("q"), "the closed formula evaluated at q");

  m.def(
      "family_size",
      [](const std::string& family, std::uint32_t q) {
        return plane::family_size(plane::family_from_name(family), q);
      },
      py::arg("family"), py::arg("q"));

  m.def(
      "stabilizer_order",
      [](const std::string& family, std::uint64_t q) {
        return big(symbolic::stabilizer_order(plane::family_from_name(family))
                       .eval_int(q));
      },
      py::arg("family"), py::arg("q"));

  m.def(
      "census",
      [](std::uint32_t q, const std::string& family, const std::string& strategy,
         unsigned threads, std::uint64_t block_size,
         const std::string& checkpoint) {
        auto fc = plane::FamilyContext::make(q);
        census::Context ctx(fc);
        auto r = run_one(ctx, plane::family_from_name(family), strategy, threads,
                         block_size, checkpoint);
        return json_loads(census::to_json_string(r));
      },
      py::arg("q"), py::arg("family"), py::arg("strategy") = "both",
      py::arg("threads") = 0, py::arg("block_size") = 4096,
      py::arg("checkpoint") = "",
      "full census of one family; returns the result document as a dict");

  m.def(
      "trigonal_count",
      [](std::uint32_t q, const std::string& strategy, unsigned threads) {
        auto fc = plane::FamilyContext::make(q);
        census::Context ctx(fc);
        auto s = run_one(ctx, Family::Split, strategy, threads, 4096, "");
        auto n = run_one(ctx, Family::NonSplit, strategy, threads, 4096, "");
        auto c = run_one(ctx, Family::Cusp, strategy, threads, 4096, "");
        return big(census::trigonal_count(s, n, c));
      },
      py::arg("q"), py::arg("strategy") = "both", py::arg("threads") = 0,
      "count smooth trigonal genus-5 curves by running all three censuses");

  m.def(
      "sieve_sums",
      [](std::uint32_t q, const std::string& family) {
        auto fc = plane::FamilyContext::make(q);
        sieve::Engine eng(fc, 5);
        Family f = plane::family_from_name(family);
        auto rep = run_sums(eng, f);
        py::dict d;
        d["family"] = family;
        d["q"] = q;
        py::list per_w;
        for (const auto& v : rep.per_weight) per_w.append(big(v));
        d["per_w"] = per_w;
        d["total"] = big(rep.total);
        d["closed_form_total"] = big((symbolic::stabilizer_order(f) *
                                      symbolic::sieve_closed_form(f))
                                         .eval_int(q));
        d["matches_numerator"] = rep.matches_numerator;
        return d;
      },
      py::arg("q"), py::arg("family"), "signed tuple sums for w <= 5");

  m.def("tables_summary", [] {
    const auto& doc = typetables::embedded();
    typetables::validate(doc);
    py::dict d;
    d["rows"] = doc.rows.size();
    d["checksum"] = doc.checksum_hex;
    d["total_odd"] = typetables::table_total(doc.rows, false).to_string();
    d["total_even"] = typetables::table_total(doc.rows, true).to_string();
    return d;
  });

  m.def(
      "det_check",
      [](const std::string& name) {
        py::list out;
        for (const auto& g : detcheck::verify_identity(detcheck::case_from_name(name))) {
          py::dict d;
          d["prime"] = g.prime;
          d["sign"] = g.sign;
          d["grid_points"] = g.grid_points;
          d["mismatches"] = g.mismatches;
          out.append(d);
        }
        return out;
      },
      py::arg("case"), "grid verification reports, one per prime");

  m.def(
      "verify",
      [](std::uint32_t q, bool extended, unsigned threads) {
        verify::Options opt;
        opt.q = q;
        opt.extended = extended;
        opt.threads = threads;
        auto rep = verify::run(opt);
        return json_loads(verify::to_json_string(rep));
      },
      py::arg("q") = 2, py::arg("extended") = false, py::arg("threads") = 0,
      "run the whole identity pipeline; returns the report as a dict");
}
