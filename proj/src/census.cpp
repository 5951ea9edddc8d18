#include "trig5/census.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "census_internal.hpp"
#include "trig5/typetables.hpp"

namespace trig5::census {

using ordered_json = nlohmann::ordered_json;

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Scan: return "scan";
    case Strategy::Eliminate: return "eliminate";
    case Strategy::Both: return "both";
  }
  throw std::invalid_argument("census: bad strategy");
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "scan") return Strategy::Scan;
  if (name == "eliminate") return Strategy::Eliminate;
  if (name == "both") return Strategy::Both;
  throw std::invalid_argument("census: unknown strategy '" + name + "'");
}

Context::Context(const plane::FamilyContext& fc) : fc_(fc) {
  if (fc.q != 2 && fc.q != 3)
    throw std::invalid_argument("census: only q = 2 and q = 3 are supported");
  // SCAN tables up to the full reduced depth for q = 2; for q = 3 the
  // deep orbits (3^12..3^18 points) are enumerated per curve instead.
  table_depth_ = fc.q == 2 ? 9 : 5;
  for (std::uint32_t d = 1; d <= 9; ++d)
    deg_fields_.push_back(ff::Field::make(fc.q, 1, d));
  scan_ = build_scan_tables(deg_fields_, fc.q, table_depth_);
  // evaluation field for resultants: smallest power above the Bezout bound
  elim_ = std::make_unique<EliminateTables>(deg_fields_[fc.q == 2 ? 4 : 2]);
}

Context::~Context() = default;

const ff::Field& Context::degree_field(std::uint32_t d) const {
  if (d == 0 || d > 9) throw std::invalid_argument("census: degree out of range");
  return deg_fields_[d - 1];
}

SingularProfile Context::singular_profile(const plane::QuinticForm& f, Strategy s) const {
  switch (s) {
    case Strategy::Scan: return profile_scan(f);
    case Strategy::Eliminate: return profile_eliminate(f);
    case Strategy::Both: {
      SingularProfile e = profile_eliminate(f);
      SingularProfile v = profile_scan(f);
      if (!(e == v))
        throw std::logic_error("census: strategy disagreement on a curve");
      return e;
    }
  }
  throw std::invalid_argument("census: bad strategy");
}

// --- run engine -------------------------------------------------------------

namespace {

struct Accum {
  std::map<combinat::Partition, std::uint64_t> profiles;
  std::map<std::array<std::uint64_t, 5>, std::uint64_t> overflow;

  void add(const SingularProfile& sp) {
    if (sp.overflow)
      ++overflow[sp.m_low];
    else
      ++profiles[sp.lambda];
  }
  void merge(const Accum& o) {
    for (const auto& [k, v] : o.profiles) profiles[k] += v;
    for (const auto& [k, v] : o.overflow) overflow[k] += v;
  }
};

constexpr const char* kCheckpointVersion = "trig5-census-checkpoint-v1";

ordered_json lambda_to_json(const combinat::Partition& lam) {
  ordered_json a = ordered_json::array();
  for (const auto& [part, mult] : lam) a.push_back(ordered_json::array({part, mult}));
  return a;
}

combinat::Partition lambda_from_json(const ordered_json& a) {
  combinat::Partition lam;
  for (const auto& e : a)
    lam.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
  return lam;
}

ordered_json accum_to_json(const Accum& acc) {
  ordered_json ps = ordered_json::array();
  for (const auto& [lam, cnt] : acc.profiles) {
    ordered_json e;
    e["lambda"] = lambda_to_json(lam);
    e["count"] = cnt;
    ps.push_back(std::move(e));
  }
  ordered_json ov = ordered_json::array();
  for (const auto& [m, cnt] : acc.overflow) {
    ordered_json e;
    e["m_low"] = m;
    e["count"] = cnt;
    ov.push_back(std::move(e));
  }
  ordered_json j;
  j["profiles"] = std::move(ps);
  j["overflow"] = std::move(ov);
  return j;
}

void accum_from_json(const ordered_json& j, Accum& acc) {
  for (const auto& e : j.at("profiles"))
    acc.profiles[lambda_from_json(e.at("lambda"))] = e.at("count").get<std::uint64_t>();
  for (const auto& e : j.at("overflow"))
    acc.overflow[e.at("m_low").get<std::array<std::uint64_t, 5>>()] =
        e.at("count").get<std::uint64_t>();
}

struct CheckpointState {
  std::uint64_t next_block = 0;
  std::uint64_t fallback_scans = 0;
  std::uint64_t slow_paths = 0;
  Accum acc;
};

void write_checkpoint(const std::string& path, const plane::FamilyContext& fc,
                      plane::Family family, Strategy strategy, std::uint64_t block_size,
                      std::uint64_t total, const CheckpointState& st) {
  ordered_json j;
  j["version"] = kCheckpointVersion;
  j["family"] = plane::family_name(family);
  j["q"] = fc.q;
  j["t"] = fc.t;
  j["n"] = fc.n;
  j["strategy"] = strategy_name(strategy);
  j["block_size"] = block_size;
  j["total"] = total;
  j["next_block"] = st.next_block;
  j["done"] = std::min(st.next_block * block_size, total);
  j["fallback_scans"] = st.fallback_scans;
  j["slow_paths"] = st.slow_paths;
  ordered_json body = accum_to_json(st.acc);
  j["profiles"] = std::move(body["profiles"]);
  j["overflow"] = std::move(body["overflow"]);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("census: cannot write checkpoint " + tmp);
    out << j.dump(1, '\t') << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("census: cannot replace checkpoint " + path);
}

bool load_checkpoint(const std::string& path, const plane::FamilyContext& fc,
                     plane::Family family, Strategy strategy, std::uint64_t block_size,
                     std::uint64_t total, CheckpointState& st) {
  std::ifstream in(path);
  if (!in) return false;
  ordered_json j = ordered_json::parse(in);
  auto expect = [&](const char* key, const ordered_json& want) {
    if (j.at(key) != want)
      throw std::runtime_error(std::string("census: checkpoint mismatch on '") + key +
                               "' in " + path);
  };
  expect("version", kCheckpointVersion);
  expect("family", plane::family_name(family));
  expect("q", fc.q);
  expect("t", fc.t);
  expect("n", fc.n);
  expect("strategy", strategy_name(strategy));
  expect("block_size", block_size);
  expect("total", total);
  st.next_block = j.at("next_block").get<std::uint64_t>();
  st.fallback_scans = j.at("fallback_scans").get<std::uint64_t>();
  st.slow_paths = j.at("slow_paths").get<std::uint64_t>();
  accum_from_json(j, st.acc);
  const std::uint64_t nblocks = block_size ? (total + block_size - 1) / block_size : 0;
  if (st.next_block > nblocks)
    throw std::runtime_error("census: checkpoint mismatch on 'next_block' in " + path);
  return true;
}

ordered_json payload_json(const Result& r) {
  ordered_json j;
  j["family"] = plane::family_name(r.family);
  j["q"] = r.q;
  j["total"] = r.total;
  ordered_json ps = ordered_json::array();
  for (const auto& [lam, cnt] : r.profiles) {
    ordered_json e;
    e["lambda"] = lambda_to_json(lam);
    e["count"] = cnt;
    ps.push_back(std::move(e));
  }
  j["profiles"] = std::move(ps);
  ordered_json ov = ordered_json::array();
  for (const auto& [m, cnt] : r.overflow) {
    ordered_json e;
    e["m_low"] = m;
    e["count"] = cnt;
    ov.push_back(std::move(e));
  }
  j["overflow"] = std::move(ov);
  return j;
}

std::string checksum_of(const Result& r) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                (unsigned long long)typetables::fnv1a64(payload_json(r).dump()));
  return buf;
}

}  // namespace

Result run_census(const Context& ctx, plane::Family family, const RunOptions& opt) {
  const plane::FamilyContext& fc = ctx.family_context();
  if (opt.block_size == 0) throw std::invalid_argument("census: zero block size");
  const std::uint64_t total = plane::family_size(family, fc.q);
  const std::uint64_t bs = opt.block_size;
  const std::uint64_t nblocks = (total + bs - 1) / bs;

  unsigned threads = opt.threads;
  if (threads == 0) {
    if (const char* env = std::getenv("TRIG5_THREADS"))
      threads = (unsigned)std::strtoul(env, nullptr, 10);
    if (threads == 0) threads = 1;
  }

  CheckpointState st;
  const bool use_ckpt = !opt.checkpoint_path.empty();
  if (use_ckpt)
    load_checkpoint(opt.checkpoint_path, fc, family, opt.strategy, bs, total, st);

  // context counters are cumulative across runs; the carried checkpoint
  // values cover the committed prefix, the delta covers this run
  const std::uint64_t carried_fb = st.fallback_scans;
  const std::uint64_t carried_sp = st.slow_paths;
  const std::uint64_t fb0 = ctx.fallback_scans();
  const std::uint64_t sp0 = ctx.slow_paths();

  std::atomic<std::uint64_t> next{st.next_block};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::map<std::uint64_t, Accum> pending;
  std::uint64_t committed = st.next_block;
  std::exception_ptr first_error;

  auto fail = [&](std::exception_ptr e) {
    if (!first_error) first_error = e;
    stop.store(true);
  };

  auto worker = [&]() {
    while (!stop.load()) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= nblocks) break;
      Accum local;
      try {
        const std::uint64_t lo = b * bs;
        const std::uint64_t hi = std::min(lo + bs, total);
        for (std::uint64_t idx = lo; idx < hi && !stop.load(); ++idx) {
          plane::QuinticForm f = plane::curve_from_index(fc, family, idx);
          local.add(ctx.singular_profile(f, opt.strategy));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        fail(std::current_exception());
        break;
      }
      std::lock_guard<std::mutex> lock(mu);
      if (stop.load()) break;  // a partial block must not be committed
      try {
        pending.emplace(b, std::move(local));
        while (!pending.empty() && pending.begin()->first == committed) {
          st.acc.merge(pending.begin()->second);
          pending.erase(pending.begin());
          ++committed;
          st.next_block = committed;
          const bool at_end = committed == nblocks;
          if (use_ckpt && (at_end || opt.checkpoint_every == 0 ||
                           committed % std::max<std::uint64_t>(opt.checkpoint_every, 1) == 0)) {
            st.fallback_scans = carried_fb + (ctx.fallback_scans() - fb0);
            st.slow_paths = carried_sp + (ctx.slow_paths() - sp0);
            write_checkpoint(opt.checkpoint_path, fc, family, opt.strategy, bs, total, st);
          }
          if (opt.progress) opt.progress(std::min(committed * bs, total), total);
        }
      } catch (...) {
        fail(std::current_exception());
        break;
      }
    }
  };

  if (committed < nblocks) {
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  Result r;
  r.family = family;
  r.q = fc.q;
  r.total = total;
  std::uint64_t seen = 0;
  for (const auto& [lam, cnt] : st.acc.profiles) {
    r.profiles.emplace_back(lam, cnt);
    seen += cnt;
  }
  for (const auto& [m, cnt] : st.acc.overflow) {
    r.overflow.emplace_back(m, cnt);
    seen += cnt;
  }
  if (seen != total) throw std::logic_error("census: bucket counts do not tile the family");
  std::sort(r.profiles.begin(), r.profiles.end(), [](const auto& a, const auto& b) {
    const std::uint64_t wa = combinat::weight(a.first), wb = combinat::weight(b.first);
    if (wa != wb) return wa < wb;
    return combinat::to_string(a.first) < combinat::to_string(b.first);
  });
  r.meta.strategy = strategy_name(opt.strategy);
  r.meta.threads = threads;
  r.meta.block_size = bs;
  r.meta.fallback_scans = carried_fb + (ctx.fallback_scans() - fb0);
  r.meta.slow_paths = carried_sp + (ctx.slow_paths() - sp0);
  r.meta.checksum = checksum_of(r);
  return r;
}

// --- bucket access ----------------------------------------------------------

std::uint64_t profile_count(const Result& r, const combinat::Partition& lambda) {
  for (const auto& [lam, cnt] : r.profiles)
    if (lam == lambda) return cnt;
  return 0;
}

std::uint64_t overflow_total(const Result& r) {
  std::uint64_t n = 0;
  for (const auto& [m, cnt] : r.overflow) n += cnt;
  return n;
}

bool same_counts(const Result& a, const Result& b) {
  return a.family == b.family && a.q == b.q && a.total == b.total &&
         a.profiles == b.profiles && a.overflow == b.overflow;
}

// --- JSON -------------------------------------------------------------------

std::string to_json_string(const Result& r, int indent) {
  ordered_json j = payload_json(r);
  ordered_json meta;
  meta["strategy"] = r.meta.strategy;
  meta["threads"] = r.meta.threads;
  meta["block_size"] = r.meta.block_size;
  meta["fallback_scans"] = r.meta.fallback_scans;
  meta["slow_paths"] = r.meta.slow_paths;
  meta["checksum"] = r.meta.checksum;
  j["meta"] = std::move(meta);
  return indent < 0 ? j.dump() : j.dump(indent);
}

Result result_from_json_string(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Result r;
  r.family = plane::family_from_name(j.at("family").get<std::string>());
  r.q = j.at("q").get<std::uint32_t>();
  r.total = j.at("total").get<std::uint64_t>();
  for (const auto& e : j.at("profiles"))
    r.profiles.emplace_back(lambda_from_json(e.at("lambda")),
                            e.at("count").get<std::uint64_t>());
  for (const auto& e : j.at("overflow"))
    r.overflow.emplace_back(e.at("m_low").get<std::array<std::uint64_t, 5>>(),
                            e.at("count").get<std::uint64_t>());
  const ordered_json& meta = j.at("meta");
  r.meta.strategy = meta.at("strategy").get<std::string>();
  r.meta.threads = meta.at("threads").get<unsigned>();
  r.meta.block_size = meta.at("block_size").get<std::uint64_t>();
  r.meta.fallback_scans = meta.at("fallback_scans").get<std::uint64_t>();
  r.meta.slow_paths = meta.at("slow_paths").get<std::uint64_t>();
  r.meta.checksum = meta.at("checksum").get<std::string>();
  if (checksum_of(r) != r.meta.checksum)
    throw std::runtime_error("census: result checksum mismatch");
  return r;
}

// --- identities --------------------------------------------------------------

combinat::Int census_signed_sum(const Result& r, std::uint32_t w) {
  if (w > 5)
    throw std::invalid_argument("census: signed sums only defined for w <= 5");
  std::vector<combinat::Int> m(5);
  combinat::Int out = 0;
  for (const auto& [lam, cnt] : r.profiles) {
    for (std::uint32_t d = 1; d <= 5; ++d) m[d - 1] = combinat::mult_of(lam, d);
    out += combinat::Int(cnt) * combinat::signed_tuple_sum(m, w);
  }
  for (const auto& [ml, cnt] : r.overflow) {
    for (std::uint32_t d = 0; d < 5; ++d) m[d] = combinat::Int(ml[d]);
    out += combinat::Int(cnt) * combinat::signed_tuple_sum(m, w);
  }
  return out;
}

combinat::Int correction_sum(const Result& r, std::uint32_t w) {
  if (w < 6 || w > 9)
    throw std::invalid_argument("census: correction terms live at weights 6..9");
  combinat::Int out = 0;
  for (const auto& [lam, cnt] : r.profiles)
    if (combinat::weight(lam) == w) out += combinat::Int(cnt) * combinat::sigma(lam);
  return out;
}

combinat::Int overflow_sigma_sum(const Result& r) {
  combinat::Int out = 0;
  for (const auto& [ml, cnt] : r.overflow)
    out += combinat::Int(cnt) * combinat::sigma_truncated(ml);
  return out;
}

MasterIdentityReport master_identity_check(const Result& r,
                                           const std::vector<combinat::Int>& sieve_per_weight) {
  if (sieve_per_weight.size() != 6)
    throw std::invalid_argument("census: expected sieve sums for w = 0..5");
  MasterIdentityReport rep;
  rep.smooth_bucket = profile_count(r, {});
  rep.sieve_partial = 0;
  for (const auto& v : sieve_per_weight) rep.sieve_partial += v;
  rep.reconstructed = rep.sieve_partial;
  for (std::uint32_t w = 6; w <= 9; ++w) {
    rep.corrections[w - 6] = correction_sum(r, w);
    rep.reconstructed += rep.corrections[w - 6];
  }
  rep.overflow_term = overflow_sigma_sum(r);
  rep.reconstructed += rep.overflow_term;
  rep.pass = rep.smooth_bucket == rep.reconstructed;
  return rep;
}

combinat::Int trigonal_count(const Result& split, const Result& nonsplit,
                             const Result& cusp) {
  if (split.q != nonsplit.q || split.q != cusp.q)
    throw std::invalid_argument("census: results disagree on q");
  if (split.family != plane::Family::Split ||
      nonsplit.family != plane::Family::NonSplit ||
      cusp.family != plane::Family::Cusp)
    throw std::invalid_argument("census: results passed in the wrong family slots");
  const combinat::Int q = split.q;
  // stabilizer orders of the normalized cone + tangent data inside PGL_3;
  // the per-family quotients need not be integral (at q=3 the split and
  // nonsplit terms are half-integers), only the total is
  const combinat::Int stab[3] = {2 * q * q * (q - 1) * (q - 1),
                                 2 * (q * q * q * q - q * q),
                                 q * q * q * (q - 1) * (q - 1)};
  const Result* res[3] = {&split, &nonsplit, &cusp};
  combinat::Int den = stab[0] * stab[1] * stab[2], num = 0;
  for (int i = 0; i < 3; ++i)
    num += combinat::Int(profile_count(*res[i], {})) * (den / stab[i]);
  if (num % den != 0)
    throw std::runtime_error(
        "census: stabilizer-weighted smooth buckets sum to a non-integer");
  return num / den;
}

// --- batched deep counts ------------------------------------------------------

namespace {

// per-form recipe: which (condition, z-exponent, y-exponent, scalar) cells a
// nonzero coefficient feeds on the chart x = 1
struct ChartEntry {
  std::uint8_t t, zexp, yexp, scalar;
};

std::vector<ChartEntry> chart_entries(const plane::QuinticForm& f, std::uint32_t p) {
  std::vector<ChartEntry> es;
  auto push = [&](std::uint32_t t, std::uint32_t z, std::uint32_t y, std::uint32_t s) {
    s %= p;
    if (s) es.push_back({(std::uint8_t)t, (std::uint8_t)z, (std::uint8_t)y, (std::uint8_t)s});
  };
  for (int m = 0; m < 21; ++m) {
    const std::uint32_t c = f.coef[m];
    if (!c) continue;
    auto [a, b, cz] = plane::kMonomials[m];
    push(0, cz, b, c);
    if (a) push(1, cz, b, a * c);
    if (b) push(2, cz, b - 1, b * c);
    if (cz) push(3, cz - 1, b, cz * c);
  }
  return es;
}

// z-coefficient rows of the four conditions on the line x = 0, y = 1
std::array<std::array<ff::Elem, 6>, 4> border_rows(const plane::QuinticForm& f,
                                                   const ff::Field& K) {
  std::array<std::array<ff::Elem, 6>, 4> rows{};
  for (int m = 0; m < 21; ++m) {
    const std::uint32_t c = f.coef[m];
    if (!c) continue;
    auto [a, b, cz] = plane::kMonomials[m];
    if (a == 0) rows[0][cz] = K.add(rows[0][cz], K.scalar_mul(c, K.one()));
    if (a == 1) rows[1][cz] = K.add(rows[1][cz], K.scalar_mul(c, K.one()));
    if (a == 0 && b) rows[2][cz] = K.add(rows[2][cz], K.scalar_mul(b * c, K.one()));
    if (a == 0 && cz) rows[3][cz - 1] = K.add(rows[3][cz - 1], K.scalar_mul(cz * c, K.one()));
  }
  return rows;
}

bool all_conditions_zero(const ff::Field& K, const std::array<std::array<ff::Elem, 6>, 4>& zc,
                         ff::Elem z) {
  for (int t = 0; t < 4; ++t) {
    ff::Elem v = 0;
    for (int i = 5; i >= 0; --i) v = K.add(K.mul(v, z), zc[(std::size_t)t][(std::size_t)i]);
    if (v != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> batched_singular_counts(
    const Context& ctx, const std::vector<plane::QuinticForm>& forms, std::uint32_t d,
    unsigned threads) {
  const ff::Field& K = ctx.degree_field(d);
  const std::uint64_t n = K.order();
  const std::uint32_t p = ctx.family_context().q;
  std::vector<std::vector<ChartEntry>> recipes;
  recipes.reserve(forms.size());
  for (const auto& f : forms) recipes.push_back(chart_entries(f, p));

  if (threads == 0) threads = 1;
  std::vector<std::vector<std::uint64_t>> partial(threads,
                                                  std::vector<std::uint64_t>(forms.size(), 0));
  auto sweep = [&](unsigned tid) {
    auto& out = partial[tid];
    std::array<ff::Elem, 6> yp{};
    std::array<std::array<ff::Elem, 6>, 4> zc{};
    for (std::uint64_t y = tid; y < n; y += threads) {
      yp[0] = K.one();
      for (int i = 1; i <= 5; ++i) yp[i] = K.mul(yp[i - 1], (ff::Elem)y);
      for (std::size_t fi = 0; fi < forms.size(); ++fi) {
        for (auto& row : zc) row.fill(0);
        for (const ChartEntry& e : recipes[fi]) {
          ff::Elem v = K.scalar_mul(e.scalar, yp[e.yexp]);
          zc[e.t][e.zexp] = K.add(zc[e.t][e.zexp], v);
        }
        std::uint64_t cnt = 0;
        for (std::uint64_t z = 0; z < n; ++z)
          if (all_conditions_zero(K, zc, (ff::Elem)z)) ++cnt;
        out[fi] += cnt;
      }
    }
  };
  if (threads == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(sweep, i);
    sweep(0);
    for (auto& th : pool) th.join();
  }

  std::vector<std::uint64_t> out(forms.size(), 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += part[i];
  // the line x = 0 (the marked point (0:0:1) stays excluded)
  for (std::size_t fi = 0; fi < forms.size(); ++fi) {
    auto rows = border_rows(forms[fi], K);
    for (std::uint64_t z = 0; z < n; ++z)
      if (all_conditions_zero(K, rows, (ff::Elem)z)) ++out[fi];
  }
  return out;
}

}  // namespace trig5::census
