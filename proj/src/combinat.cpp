#include "trig5/combinat.hpp"

#include <algorithm>
#include <stdexcept>

namespace trig5::combinat {

std::uint64_t weight(const Partition& p) {
  std::uint64_t w = 0;
  for (auto [part, mult] : p) w += (std::uint64_t)part * mult;
  return w;
}

std::uint32_t part_count(const Partition& p) {
  std::uint32_t c = 0;
  for (auto [part, mult] : p) c += mult;
  return c;
}

std::uint32_t mult_of(const Partition& p, std::uint32_t part) {
  for (auto [pt, mult] : p)
    if (pt == part) return mult;
  return 0;
}

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i].first) + "^" + std::to_string(p[i].second);
  }
  return s + "]";
}

Partition from_mults(const std::vector<std::uint64_t>& m) {
  Partition p;
  for (size_t d = 0; d < m.size(); ++d)
    if (m[d]) p.push_back({(std::uint32_t)(d + 1), (std::uint32_t)m[d]});
  return p;
}

Partition append_node(Partition p) {
  for (auto& [part, mult] : p)
    if (part == 1) {
      ++mult;
      return p;
    }
  p.insert(p.begin(), {1, 1});
  return p;
}

static void gen(std::uint32_t rest, std::uint32_t minpart, Partition& cur,
                std::vector<Partition>& out) {
  if (!rest) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t part = minpart; part <= rest; ++part) {
    for (std::uint32_t mult = 1; (std::uint64_t)part * mult <= rest; ++mult) {
      cur.push_back({part, mult});
      gen(rest - part * mult, part + 1, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<Partition> partitions_of_weight(std::uint32_t w) {
  std::vector<Partition> out;
  Partition cur;
  gen(w, 1, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(std::uint32_t w) {
  std::vector<Partition> out;
  for (std::uint32_t k = 0; k <= w; ++k) {
    auto v = partitions_of_weight(k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda, std::uint64_t bound) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, size_t i, std::uint64_t left) -> void {
    if (i == lambda.size()) {
      out.push_back(cur);
      return;
    }
    auto [part, mult] = lambda[i];
    for (std::uint32_t k = 0; k <= mult && (std::uint64_t)part * k <= left; ++k) {
      if (k) cur.push_back({part, k});
      self(self, i + 1, left - (std::uint64_t)part * k);
      if (k) cur.pop_back();
    }
  };
  rec(rec, 0, bound);
  return out;
}

Int binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= Int(n - i);
    r /= Int(i + 1);
  }
  return r;
}

Int sigma(const Partition& lambda, std::uint32_t N) {
  Int s = 0;
  for (const auto& mu : subpartitions(lambda, N)) {
    Int term = 1;
    for (auto [part, mult] : mu) term *= binom(mult_of(lambda, part), mult);
    s += (part_count(mu) % 2 ? -term : term);
  }
  return -s;
}

Int sigma_truncated(const std::array<std::uint64_t, 5>& m_low, std::uint32_t N) {
  if (N > 5) throw std::invalid_argument("sigma_truncated: N > 5 needs deeper counts");
  Partition lam;
  for (std::uint32_t d = 1; d <= 5; ++d)
    if (m_low[d - 1]) lam.push_back({d, (std::uint32_t)m_low[d - 1]});
  // subpartitions of weight <= N <= 5 only probe parts 1..5
  return sigma(lam, N);
}

Int signed_tuple_sum(const std::vector<Int>& m, std::uint32_t w) {
  Int s = 0;
  for (const auto& lam : partitions_of_weight(w)) {
    Int term = 1;
    for (auto [part, mult] : lam) {
      if (part > m.size()) {
        term = 0;
        break;
      }
      Int avail = m[part - 1];
      if (avail < mult) {
        term = 0;
        break;
      }
      // C(avail, mult) with avail a big integer
      Int c = 1;
      for (std::uint32_t i = 0; i < mult; ++i) {
        c *= avail - i;
        c /= i + 1;
      }
      term *= c;
    }
    s += (part_count(lam) % 2 ? -term : term);
  }
  return s;
}

std::vector<Int> mobius_orbit_counts(const std::vector<Int>& N) {
  static const int mu[21] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1,
                             -1, 0, -1, 1, 1, 0, -1, 0, -1, 0};
  if (N.size() > 20) throw std::invalid_argument("mobius: depth > 20");
  std::vector<Int> m(N.size());
  for (std::uint32_t d = 1; d <= N.size(); ++d) {
    Int s = 0;
    for (std::uint32_t e = 1; e <= d; ++e)
      if (d % e == 0) s += mu[d / e] * N[e - 1];
    if (s % d != 0) throw std::domain_error("mobius: non-integral orbit count");
    Int md = s / d;
    if (md < 0) throw std::domain_error("mobius: negative orbit count");
    m[d - 1] = md;
  }
  return m;
}

Int tuple_count(const std::vector<Int>& N, const Partition& lambda) {
  auto m = mobius_orbit_counts(N);
  Int r = 1;
  for (auto [part, mult] : lambda) {
    if (part > m.size()) throw std::invalid_argument("tuple_count: depth too small");
    Int avail = m[part - 1], c = 1;
    for (std::uint32_t i = 0; i < mult; ++i) {
      c *= avail - i;
      c /= i + 1;
    }
    r *= c;
  }
  return r;
}

Int pi_w(const std::vector<Int>& N, std::uint32_t w) {
  std::vector<Int> m = mobius_orbit_counts(N);
  return signed_tuple_sum(m, w);
}

}  // namespace trig5::combinat
