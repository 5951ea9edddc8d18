#include "trig5/plane.hpp"

#include <stdexcept>

namespace trig5::plane {

const char* family_name(Family f) {
  switch (f) {
    case Family::Split: return "split";
    case Family::NonSplit: return "nonsplit";
    case Family::Cusp: return "cusp";
  }
  throw std::logic_error("bad family");
}

Family family_from_name(const std::string& s) {
  if (s == "split") return Family::Split;
  if (s == "nonsplit") return Family::NonSplit;
  if (s == "cusp") return Family::Cusp;
  throw std::invalid_argument("unknown family: " + s);
}

int monomial_index(int a, int b) {
  for (int i = 0; i < 21; ++i)
    if (kMonomials[i].a == a && kMonomials[i].b == b) return i;
  return -1;
}

std::string monomial_name(int i) {
  const auto& m = kMonomials[i];
  std::string s;
  auto app = [&](char v, int e) {
    if (!e) return;
    s += v;
    if (e > 1) s += (char)('0' + e);
  };
  app('x', m.a);
  app('y', m.b);
  app('z', m.c);
  return s;
}

FamilyContext FamilyContext::make(std::uint32_t q) {
  FamilyContext ctx;
  ctx.q = q;
  auto qd = ff::quadratic_data(ff::Field::make(q, 1, 2));  // validates q prime
  ctx.t = qd.t_base;
  ctx.n = qd.n_base;
  return ctx;
}

std::uint64_t family_size(Family f, std::uint32_t q) {
  std::uint64_t n = 1;
  for (int i = 0; i < 14; ++i) n *= q;
  return f == Family::Cusp ? (q - 1) * n : n * q;
}

QuinticForm curve_from_index(const FamilyContext& ctx, Family f, std::uint64_t idx) {
  if (idx >= family_size(f, ctx.q)) throw std::out_of_range("curve index");
  QuinticForm form{f, ctx.q, {}};
  switch (f) {
    case Family::Split: form.coef[kCoefXYZ3] = 1; break;
    case Family::NonSplit:
      form.coef[kCoefX2Z3] = 1;
      form.coef[kCoefXYZ3] = (std::uint8_t)ctx.t;
      form.coef[kCoefY2Z3] = (std::uint8_t)ctx.n;
      break;
    case Family::Cusp: form.coef[kCoefY2Z3] = 1; break;
  }
  // mixed radix, least significant digit at the first free position;
  // the cusp x^3 z^2 slot has radix q-1 with digit k meaning k+1
  for (int pos : kFreeCoeff) {
    std::uint32_t radix = (f == Family::Cusp && pos == kCoefX3Z2) ? ctx.q - 1 : ctx.q;
    std::uint32_t digit = (std::uint32_t)(idx % radix);
    idx /= radix;
    if (f == Family::Cusp && pos == kCoefX3Z2) ++digit;
    form.coef[pos] = (std::uint8_t)digit;
  }
  return form;
}

std::uint64_t index_of_curve(const FamilyContext& ctx, const QuinticForm& form) {
  std::uint64_t idx = 0, pw = 1;
  for (int pos : kFreeCoeff) {
    std::uint32_t radix =
        (form.family == Family::Cusp && pos == kCoefX3Z2) ? ctx.q - 1 : ctx.q;
    std::uint32_t digit = form.coef[pos];
    if (form.family == Family::Cusp && pos == kCoefX3Z2) --digit;
    idx += pw * digit;
    pw *= radix;
  }
  return idx;
}

ProjPoint normalize(const ff::Field& F, ProjPoint pt) {
  ff::Elem lead = pt.x ? pt.x : pt.y ? pt.y : pt.z;
  if (!lead) throw std::invalid_argument("zero vector is not a point");
  if (lead == 1) return pt;
  ff::Elem s = F.inv(lead);
  return {F.mul(pt.x, s), F.mul(pt.y, s), F.mul(pt.z, s)};
}

ProjPoint frobenius_point(const ff::Field& F, ProjPoint pt) {
  return {F.frobenius(pt.x), F.frobenius(pt.y), F.frobenius(pt.z)};
}

std::uint32_t point_exact_degree(const ff::Field& F, ProjPoint pt) {
  // normalized points stay normalized under Frobenius
  ProjPoint cur = frobenius_point(F, pt);
  std::uint32_t d = 1;
  while (!(cur == pt)) {
    cur = frobenius_point(F, cur);
    ++d;
  }
  return d;
}

std::array<ff::Elem, 4> eval_with_partials(const ff::Field& F, const QuinticForm& form,
                                           const ProjPoint& pt) {
  std::uint32_t p = F.p();
  ff::Elem px[6], py[6], pz[6];
  px[0] = py[0] = pz[0] = 1;
  for (int i = 1; i < 6; ++i) {
    px[i] = F.mul(px[i - 1], pt.x);
    py[i] = F.mul(py[i - 1], pt.y);
    pz[i] = F.mul(pz[i - 1], pt.z);
  }
  std::array<ff::Elem, 4> r{0, 0, 0, 0};
  for (int i = 0; i < 21; ++i) {
    std::uint32_t c = form.coef[i];
    if (!c) continue;
    const auto& m = kMonomials[i];
    r[0] = F.add(r[0], F.scalar_mul(c, F.mul(F.mul(px[m.a], py[m.b]), pz[m.c])));
    if (m.a % p)
      r[1] = F.add(r[1], F.scalar_mul(c * (m.a % p),
                                      F.mul(F.mul(px[m.a - 1], py[m.b]), pz[m.c])));
    if (m.b % p)
      r[2] = F.add(r[2], F.scalar_mul(c * (m.b % p),
                                      F.mul(F.mul(px[m.a], py[m.b - 1]), pz[m.c])));
    if (m.c % p)
      r[3] = F.add(r[3], F.scalar_mul(c * (m.c % p),
                                      F.mul(F.mul(px[m.a], py[m.b]), pz[m.c - 1])));
  }
  return r;
}

bool is_singular_at(const ff::Field& F, const QuinticForm& form, const ProjPoint& pt) {
  auto v = eval_with_partials(F, form, pt);
  return !v[0] && !v[1] && !v[2] && !v[3];
}

}  // namespace trig5::plane
