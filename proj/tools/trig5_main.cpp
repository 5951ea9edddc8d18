// Command-line front end.  Machine output (JSON) goes to standard out or
// --out; progress and human summaries go to standard error.  Exit codes:
// 0 pass, 1 check failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
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

namespace {

using trig5::combinat::Int;
using trig5::plane::Family;
using trig5::symbolic::QPoly;

QPoly theorem_poly() {
  using trig5::symbolic::main_theorem;
  return main_theorem(QPoly::constant(1));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open " + out_path);
    os << text << "\n";
  }
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::vector<Family> families_from(const std::string& name) {
  if (name == "all")
    return {Family::Split, Family::NonSplit, Family::Cusp};
  return {trig5::plane::family_from_name(name)};
}

// block-granularity progress line on stderr; cleared when done
void progress_line(std::uint64_t done, std::uint64_t total) {
  std::fprintf(stderr, "\r%llu/%llu curves", (unsigned long long)done,
               (unsigned long long)total);
  if (done >= total) std::fprintf(stderr, "\n");
  std::fflush(stderr);
}

int cmd_formula(std::uint32_t q, bool has_q) {
  QPoly t = theorem_poly();
  std::cout << t.to_string() << "\n";
  if (has_q) std::cout << t.eval_int(q).str() << "\n";
  return 0;
}

int cmd_census(std::uint32_t q, const std::string& family,
               const std::string& strategy, unsigned threads,
               std::uint64_t block, const std::string& checkpoint,
               const std::string& out, int indent) {
  auto fams = families_from(family);
  auto fc = trig5::plane::FamilyContext::make(q);
  trig5::census::Context ctx(fc);
  trig5::census::RunOptions opt;
  opt.strategy = trig5::census::strategy_from_name(strategy);
  opt.threads = threads;
  opt.block_size = block;
  opt.progress = progress_line;

  std::vector<std::string> blobs;
  for (Family f : fams) {
    if (!checkpoint.empty())
      opt.checkpoint_path = fams.size() == 1
                                ? checkpoint
                                : checkpoint + "." + trig5::plane::family_name(f);
    std::fprintf(stderr, "census q=%u %s (%s)\n", q,
                 trig5::plane::family_name(f), strategy.c_str());
    auto r = run_census(ctx, f, opt);
    blobs.push_back(trig5::census::to_json_string(r, indent));
  }
  if (blobs.size() == 1) {
    emit(blobs[0], out);
  } else {
    std::string joined = "[";
    for (std::size_t i = 0; i < blobs.size(); ++i)
      joined += (i ? ",\n" : "\n") + blobs[i];
    emit(joined + "\n]", out);
  }
  return 0;
}

int cmd_sieve(std::uint32_t q, const std::string& family, int w,
              const std::string& oracle_path, const std::string& out,
              int indent) {
  auto fams = families_from(family);
  auto fc = trig5::plane::FamilyContext::make(q);
  trig5::sieve::Engine eng(fc, 5);

  std::vector<trig5::census::Result> oracle;
  if (!oracle_path.empty()) {
    auto text = slurp(oracle_path);
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.is_array())
      for (const auto& item : j)
        oracle.push_back(trig5::census::result_from_json_string(item.dump()));
    else
      oracle.push_back(trig5::census::result_from_json_string(text));
  }

  bool all_match = true;
  nlohmann::json out_doc = nlohmann::json::array();
  for (Family f : fams) {
    auto rep = run_sums(eng, f);
    nlohmann::json jf;
    jf["family"] = trig5::plane::family_name(f);
    jf["q"] = q;
    jf["per_w"] = nlohmann::json::array();
    for (std::uint32_t i = 0; i <= 5; ++i) {
      if (w >= 0 && (int)i != w) continue;
      jf["per_w"].push_back(rep.per_weight[i].str());
    }
    jf["total"] = rep.total.str();
    jf["closed_form_total"] =
        (trig5::symbolic::stabilizer_order(f) * trig5::symbolic::sieve_closed_form(f))
            .eval_int(q)
            .str();
    all_match = all_match && rep.matches_numerator;
    for (const auto& r : oracle) {
      if (r.family != f) continue;
      if (r.q != q) throw std::runtime_error("oracle census has a different q");
      nlohmann::json jo = nlohmann::json::array();
      bool match = true;
      for (std::uint32_t i = 0; i <= 5; ++i) {
        if (w >= 0 && (int)i != w) continue;
        Int side = trig5::census::census_signed_sum(r, i);
        jo.push_back(side.str());
        match = match && side == rep.per_weight[i];
      }
      jf["oracle_totals"] = std::move(jo);
      jf["oracle_match"] = match;
      all_match = all_match && match;
    }
    out_doc.push_back(std::move(jf));
  }
  emit(out_doc.size() == 1 ? out_doc[0].dump(indent) : out_doc.dump(indent), out);
  return all_match ? 0 : 1;
}

int cmd_tables(bool dump, const std::string& out, int indent) {
  using namespace trig5::typetables;
  if (dump) {
    emit(embedded_json(), out);
    return 0;
  }
  const TableDoc& doc = embedded();
  validate(doc);
  nlohmann::json j;
  j["rows"] = doc.rows.size();
  j["checksum"] = doc.checksum_hex;
  j["total_odd"] = table_total(doc.rows, false).to_string();
  j["total_even"] = table_total(doc.rows, true).to_string();
  bool integral = true;
  for (const auto& row : doc.rows)
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
      integral = integral && integrality_check(row, q);
  j["integral_q2_to_9"] = integral;
  QPoly assembled = trig5::symbolic::main_theorem(table_total(doc.rows, false));
  j["assembled"] = assembled.to_string();
  emit(j.dump(indent), out);
  bool pass = integral && table_total(doc.rows, false) == QPoly::constant(1) &&
              table_total(doc.rows, true) == QPoly::constant(1) &&
              assembled == theorem_poly();
  return pass ? 0 : 1;
}

int cmd_det(const std::string& which, const std::string& out, int indent) {
  using namespace trig5::detcheck;
  std::vector<Case> cases;
  if (which == "all")
    cases = {Case::GenPos5, Case::Lines, Case::Cusp4};
  else
    cases = {case_from_name(which)};
  nlohmann::json j = nlohmann::json::array();
  bool pass = true;
  for (Case c : cases) {
    int sign0 = 0;
    for (const auto& g : verify_identity(c)) {
      nlohmann::json jg;
      jg["case"] = case_name(c);
      jg["prime"] = g.prime;
      jg["sign"] = g.sign;
      jg["grid_points"] = g.grid_points;
      jg["mismatches"] = g.mismatches;
      j.push_back(std::move(jg));
      if (sign0 == 0) sign0 = g.sign;
      pass = pass && g.mismatches == 0 && g.sign != 0 && g.sign == sign0 &&
             g.grid_points > 0;
    }
  }
  emit(j.dump(indent), out);
  return pass ? 0 : 1;
}

int cmd_verify(std::uint32_t q, bool extended, unsigned threads,
               std::uint64_t block, const std::string& checkpoint_dir,
               const std::string& out, int indent, bool timings) {
  trig5::verify::Options opt;
  opt.q = q;
  opt.extended = extended;
  opt.threads = threads;
  opt.block_size = block;
  opt.checkpoint_dir = checkpoint_dir;
  opt.progress = progress_line;
  opt.on_check = [](const trig5::verify::Check& c) {
    std::fprintf(stderr, "%s %s (%.2f s)\n", c.pass ? "[ ok ]" : "[FAIL]",
                 c.name.c_str(), c.seconds);
  };
  auto rep = trig5::verify::run(opt);
  emit(trig5::verify::to_json_string(rep, indent, timings), out);
  std::fputs(trig5::verify::human_summary(rep).c_str(), stderr);
  return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact count of smooth trigonal genus-5 curves over F_q"};
  app.require_subcommand(1);
  app.footer(
      "Environment: TRIG5_THREADS sets the default worker count when\n"
      "--threads is 0 or absent.");

  std::uint32_t q = 2;
  std::string family = "all", strategy = "both", checkpoint, out, oracle;
  std::string det_case = "all", checkpoint_dir;
  unsigned threads = 0;
  std::uint64_t block = 4096;
  int w = -1, indent = 2;
  bool dump = false, extended = false, timings = false;

  auto* formula = app.add_subcommand("formula", "print the closed formula");
  auto* fq = formula->add_option("--q", q, "evaluate at q");

  auto* census = app.add_subcommand("census", "full census of one family");
  census->add_option("--q", q, "field size (2 or 3)")->required();
  census->add_option("--family", family, "split|nonsplit|cusp|all");
  census->add_option("--strategy", strategy, "scan|eliminate|both");
  census->add_option("--threads", threads, "worker threads (0: TRIG5_THREADS)");
  census->add_option("--block", block, "curves per work block");
  census->add_option("--checkpoint", checkpoint, "checkpoint file path");
  census->add_option("--out", out, "write JSON here instead of stdout");
  census->add_option("--indent", indent, "JSON indent (-1: compact)");

  auto* sieve = app.add_subcommand("sieve", "signed tuple sums, w <= 5");
  sieve->add_option("--q", q, "field size (2 or 3)")->required();
  sieve->add_option("--family", family, "split|nonsplit|cusp|all");
  sieve->add_option("--w", w, "restrict to one weight");
  sieve->add_option("--oracle", oracle, "census JSON to cross-check against");
  sieve->add_option("--out", out, "write JSON here instead of stdout");
  sieve->add_option("--indent", indent, "JSON indent (-1: compact)");

  auto* tables = app.add_subcommand("tables", "validate the embedded type table");
  tables->add_flag("--dump", dump, "print the raw embedded JSON");
  tables->add_option("--out", out, "write JSON here instead of stdout");
  tables->add_option("--indent", indent, "JSON indent (-1: compact)");

  auto* det = app.add_subcommand("det", "determinant identity grid checks");
  det->add_option("--case", det_case, "genpos5|lines|cusp4|all");
  det->add_option("--out", out, "write JSON here instead of stdout");
  det->add_option("--indent", indent, "JSON indent (-1: compact)");

  auto* verify = app.add_subcommand("verify", "run the whole identity pipeline");
  verify->add_option("--q", q, "field size (2 or 3)");
  verify->add_flag("--extended", extended, "allow the q=3 census (~40 min/core)");
  verify->add_option("--threads", threads, "worker threads (0: TRIG5_THREADS)");
  verify->add_option("--block", block, "curves per work block");
  verify->add_option("--checkpoint-dir", checkpoint_dir,
                     "directory for census checkpoints");
  verify->add_option("--out", out, "write JSON here instead of stdout");
  verify->add_option("--indent", indent, "JSON indent (-1: compact)");
  verify->add_flag("--timings", timings, "include per-check seconds in JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (formula->parsed()) return cmd_formula(q, fq->count() > 0);
    if (census->parsed())
      return cmd_census(q, family, strategy, threads, block, checkpoint, out,
                        indent);
    if (sieve->parsed()) return cmd_sieve(q, family, w, oracle, out, indent);
    if (tables->parsed()) return cmd_tables(dump, out, indent);
    if (det->parsed()) return cmd_det(det_case, out, indent);
    if (verify->parsed())
      return cmd_verify(q, extended, threads, block, checkpoint_dir, out, indent,
                        timings);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
