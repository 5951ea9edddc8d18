#pragma once
// Brute-force census of a whole family over F_q.  Every curve gets a
// singular-locus profile: the multiset of exact degrees of the Frobenius
// orbits of singular points other than the marked point P.  Reduced curves
// carry at most 9 degree units of singularity (arithmetic genus drop), so a
// finite profile is a partition of weight <= 9.  Non-reduced curves have
// infinitely many singular points and are reported as Overflow together with
// the exact low-degree counts m_1..m_5, which are always fully determined.
//
// Two independent strategies produce the profile: SCAN walks precomputed
// orbit representatives and tests the four singularity conditions per orbit;
// ELIMINATE factors the singular locus through resultants and univariate
// gcds without ever leaving F_q[x].  Strategy::Both runs both per curve and
// aborts on any disagreement.

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trig5/combinat.hpp"
#include "trig5/ff.hpp"
#include "trig5/plane.hpp"

namespace trig5::census {

enum class Strategy { Scan, Eliminate, Both };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

// Profile of Sing(C) \ {P}.  When overflow is false, lambda is the exact
// partition (ascending parts with multiplicities) and m_low restates its
// degree-<=5 counts.  When overflow is true the orbit multiset is infinite
// or has weight > 9; m_low still holds the exact counts of degree-1..5
// orbits and lambda is empty.
struct SingularProfile {
  bool overflow = false;
  combinat::Partition lambda;
  std::array<std::uint64_t, 5> m_low{};

  friend bool operator==(const SingularProfile&, const SingularProfile&) = default;
};

struct ScanRep;  // internal: per-orbit condition tables

// Immutable per-(q, family-context) state shared by all worker threads:
// orbit representative tables for SCAN and evaluation/interpolation tables
// for ELIMINATE.  Construction enumerates P^2(F_{q^d}) up to the table
// depth; keep one Context per run.
class Context {
 public:
  explicit Context(const plane::FamilyContext& fc);
  ~Context();
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const plane::FamilyContext& family_context() const { return fc_; }
  // Depth to which SCAN uses precomputed tables; beyond it (up to 9) orbits
  // are enumerated on the fly per curve.
  std::uint32_t table_depth() const { return table_depth_; }
  const ff::Field& degree_field(std::uint32_t d) const;

  SingularProfile profile_scan(const plane::QuinticForm& f) const;
  SingularProfile profile_eliminate(const plane::QuinticForm& f) const;
  // Both: ELIMINATE result, cross-checked against SCAN; mismatch throws.
  SingularProfile singular_profile(const plane::QuinticForm& f, Strategy s) const;

  // True iff f has no repeated factor.  Independent of the profile code
  // paths above (bivariate gcds only); used to cross-check overflow.
  bool is_reduced(const plane::QuinticForm& f) const;

  // n_d = #(Sing(C) \ {P})(F_{q^d}) by direct point enumeration.  Oracle for
  // the identity n_d = sum_{e|d} e*m_e; O(q^{2d}) per call.
  std::uint64_t direct_singular_count(const plane::QuinticForm& f, std::uint32_t d) const;

  std::uint64_t fallback_scans() const { return fallback_scans_.load(); }
  std::uint64_t slow_paths() const { return slow_paths_.load(); }

 private:
  plane::FamilyContext fc_;
  std::uint32_t table_depth_;
  std::vector<ff::Field> deg_fields_;              // F_{q^d}, d = 1..9
  std::vector<std::vector<ScanRep>> scan_;         // [d-1], d <= table_depth
  std::unique_ptr<struct EliminateTables> elim_;
  mutable std::atomic<std::uint64_t> fallback_scans_{0};
  mutable std::atomic<std::uint64_t> slow_paths_{0};

  // orbit count at one degree: tables if d <= table_depth, else on the fly
  std::uint64_t scan_degree_count_(const plane::QuinticForm& f, std::uint32_t d) const;
  // exact m_1..m_5 for a curve already known to overflow
  SingularProfile scan_overflow_profile_(const plane::QuinticForm& f) const;
};

struct RunOptions {
  Strategy strategy = Strategy::Both;
  unsigned threads = 0;            // 0: TRIG5_THREADS env var, else 1
  std::uint64_t block_size = 4096;
  std::string checkpoint_path;     // empty: no checkpointing
  std::uint64_t checkpoint_every = 16;  // blocks between checkpoint writes
  // Called after each committed block with (curves done, family size).
  // Errors thrown here stop the run after the active blocks finish.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct Result {
  plane::Family family{};
  std::uint32_t q = 0;
  std::uint64_t total = 0;
  // Finite profiles keyed by partition, sorted by (weight, rendering);
  // overflow buckets keyed by m_low, sorted lexicographically.
  std::vector<std::pair<combinat::Partition, std::uint64_t>> profiles;
  std::vector<std::pair<std::array<std::uint64_t, 5>, std::uint64_t>> overflow;

  struct Meta {
    std::string strategy;
    unsigned threads = 1;
    std::uint64_t block_size = 0;
    std::uint64_t fallback_scans = 0;
    std::uint64_t slow_paths = 0;
    std::string checksum;  // fnv1a64 over the non-meta payload, hex
  } meta;
};

// Count for one partition bucket (0 when absent).  profile_count(r, {}) is
// the smooth bucket |C([])|.
std::uint64_t profile_count(const Result& r, const combinat::Partition& lambda);
std::uint64_t overflow_total(const Result& r);

// Payload equality, ignoring meta (thread count etc. may differ).
bool same_counts(const Result& a, const Result& b);

Result run_census(const Context& ctx, plane::Family family, const RunOptions& opt = {});

// n_d for several curves in one sweep of P^2(F_{q^d}) \ {P}: counts all
// F_{q^d}-rational singular points, no orbit bookkeeping.  The independent
// deep oracle for n_d = sum_{e|d} e*m_e; cost one pass over q^{2d} points.
std::vector<std::uint64_t> batched_singular_counts(
    const Context& ctx, const std::vector<plane::QuinticForm>& forms,
    std::uint32_t d, unsigned threads = 1);

std::string to_json_string(const Result& r, int indent = -1);
Result result_from_json_string(const std::string& text);

// --- identity checks against the sieve ---------------------------------

// Signed inclusion-exclusion sum the census side induces at weight w <= 5:
// every bucket contributes count * (signed tuple count drawn from its orbit
// multiset).  Must equal the sieve engine's signed_sum(family, w) exactly.
combinat::Int census_signed_sum(const Result& r, std::uint32_t w);

// Correction term at weight w in 6..9: sum over finite buckets of weight w
// of count * sigma_5(lambda).
combinat::Int correction_sum(const Result& r, std::uint32_t w);

// Overflow correction: sum over overflow buckets of count * sigma_5
// truncated to the exact m_1..m_5.
combinat::Int overflow_sigma_sum(const Result& r);

struct MasterIdentityReport {
  bool pass = false;
  combinat::Int smooth_bucket;          // |C([])| from the census
  combinat::Int sieve_partial;          // sum of per-weight sieve sums, w <= 5
  std::array<combinat::Int, 4> corrections;  // w = 6, 7, 8, 9
  combinat::Int overflow_term;
  combinat::Int reconstructed;          // sieve_partial + corrections + overflow
};

// |C([])| = S_5 + corrections + overflow term, with the left side read off
// the census and S_5 supplied by the caller (per-weight sieve sums w=0..5).
MasterIdentityReport master_identity_check(const Result& r,
                                           const std::vector<combinat::Int>& sieve_per_weight);

// Sum over the three families of |C([])| / |stabilizer|: the exact number of
// smooth trigonal genus-5 curves over F_q.  The per-family quotients may be
// half-integers; throws when the total is not an integer or the inputs
// disagree on q.  The truncated per-family sieve values divided by the same
// stabilizers differ from this by exactly +1 in total: that is where the
// constant term of q^11 + q^10 - q^8 + 1 comes from.
combinat::Int trigonal_count(const Result& split, const Result& nonsplit,
                             const Result& cusp);

}  // namespace trig5::census
