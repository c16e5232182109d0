#include "heckeforge/skew.hpp"

#include <stdexcept>

namespace hf::skew {

using coxeter::DihedralDatum;
using coxeter::GroupElement;
using namespace exact;

DemazureDatum make_datum(int m, int a12, int a21, MonomialAction action,
                         std::array<ExpVec, 2> v,
                         std::vector<std::string> names, bool lattice,
                         std::array<int, 2> qslot) {
  if (a12 > 0 || a21 > 0 || (a12 == 0) != (a21 == 0))
    throw std::invalid_argument("not a generalized Cartan pair");
  int prod = a12 * a21;
  int expect = prod <= 2 ? 2 + prod : (prod == 3 ? 6 : -1);
  if (m != expect)
    throw std::invalid_argument("m does not match the Cartan pair");
  if (action.m != m) throw std::invalid_argument("action order mismatch");
  return DemazureDatum{DihedralDatum(m), action, v,     a12,
                       a21,              std::move(names), lattice, qslot};
}

DemazureDatum builtin_datum(std::string_view name) {
  auto mk = [](int m, int a12, int a21) {
    return make_datum(m, a12, a21, cartan_action(m, a12, a21),
                      {ev(1, 0), ev(0, 1)}, {"t1", "t2"});
  };
  if (name == "A1xA1") return mk(2, 0, 0);
  if (name == "A2") return mk(3, -1, -1);
  if (name == "B2") return mk(4, -2, -1);
  if (name == "G2") return mk(6, -3, -1);
  throw std::invalid_argument("unknown datum: " + std::string(name));
}

namespace {

void put(SkewElement& a, GroupElement w, const RatFunc& f) {
  if (rf_is_zero(f)) return;
  auto it = a.coeff.find(w);
  if (it == a.coeff.end()) {
    a.coeff.emplace(w, f);
  } else {
    it->second = rf_add(it->second, f);
    if (rf_is_zero(it->second)) a.coeff.erase(it);
  }
}

}  // namespace

SkewElement sk_zero() { return {}; }

SkewElement sk_int(const mpz_class& c) {
  SkewElement a;
  put(a, coxeter::identity(), rf_int(c));
  return a;
}

SkewElement sk_group(GroupElement w) {
  SkewElement a;
  a.coeff.emplace(w, rf_int(1));
  return a;
}

SkewElement sk_term(GroupElement w, RatFunc f) {
  SkewElement a;
  put(a, w, f);
  return a;
}

SkewElement demazure(const DemazureDatum& d, int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("generator index");
  RatFunc tau = rf_tau(d.v[i - 1]);
  SkewElement a;
  put(a, coxeter::identity(), tau);
  put(a, coxeter::gen(i), rf_neg(tau));
  return a;
}

SkewElement sk_add(const SkewElement& a, const SkewElement& b) {
  SkewElement c = a;
  for (const auto& [w, f] : b.coeff) put(c, w, f);
  return c;
}

SkewElement sk_sub(const SkewElement& a, const SkewElement& b) {
  SkewElement c = a;
  for (const auto& [w, f] : b.coeff) put(c, w, rf_neg(f));
  return c;
}

SkewElement sk_neg(const SkewElement& a) {
  SkewElement c;
  for (const auto& [w, f] : a.coeff) c.coeff.emplace(w, rf_neg(f));
  return c;
}

SkewElement sk_mul(const DemazureDatum& d, const SkewElement& a,
                   const SkewElement& b) {
  SkewElement c;
  for (const auto& [w, f] : a.coeff)
    for (const auto& [u, g] : b.coeff)
      put(c, mul(d.W, w, u), rf_mul(f, rf_act(d.action, d.W, w, g)));
  return c;
}

bool sk_is_zero(const SkewElement& a) { return a.coeff.empty(); }

bool sk_eq(const SkewElement& a, const SkewElement& b) {
  return sk_is_zero(sk_sub(a, b));
}

SkewElement eval(const expr::ExprPtr& e, const DemazureDatum& d) {
  using expr::Kind;
  switch (e->kind) {
    case Kind::Sum:
      return sk_add(eval(e->lhs, d), eval(e->rhs, d));
    case Kind::Diff:
      return sk_sub(eval(e->lhs, d), eval(e->rhs, d));
    case Kind::Prod:
      return sk_mul(d, eval(e->lhs, d), eval(e->rhs, d));
    case Kind::IntLit:
      return sk_int(e->lit);
    case Kind::GenS:
      return sk_group(coxeter::gen(e->index));
    case Kind::GenD:
      return demazure(d, e->index);
    case Kind::GenQ: {
      int slot = d.qslot[e->index - 1];
      if (slot < 0)
        throw std::invalid_argument("datum has no central scalar q" +
                                    std::to_string(e->index));
      ExpVec v;
      v.e[slot] = 1;
      return sk_term(coxeter::identity(), rf_poly(lp_monomial(v)));
    }
    case Kind::LatticeX: {
      if (!d.lattice)
        throw std::invalid_argument("datum has no exponent lattice for X");
      return sk_term(coxeter::identity(),
                     rf_poly(lp_monomial(ev(e->lam[0], e->lam[1]))));
    }
  }
  throw std::logic_error("unreachable");
}

RatFunc sk_apply(const DemazureDatum& d, const SkewElement& a,
                 const RatFunc& g) {
  RatFunc out = rf_zero();
  for (const auto& [w, f] : a.coeff)
    out = rf_add(out, rf_mul(f, rf_act(d.action, d.W, w, g)));
  return out;
}

nlohmann::ordered_json sk_to_json(const DemazureDatum& d,
                                  const SkewElement& a) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [w, f] : a.coeff) {
    nlohmann::ordered_json den = nlohmann::ordered_json::array();
    for (const auto& [v, k] : f.den) {
      LaurentPoly fac = lp_sub(lp_int(1), lp_monomial(v));
      for (int i = 0; i < k; ++i) den.push_back(lp_render(fac, d.names));
    }
    out.push_back({{"word", coxeter::to_string(d.W, w)},
                   {"coeff_num", lp_render(f.num, d.names)},
                   {"coeff_den_factors", den}});
  }
  return out;
}

std::string sk_render(const DemazureDatum& d, const SkewElement& a) {
  if (a.coeff.empty()) return "0";
  std::string out;
  for (const auto& [w, f] : a.coeff) {
    if (!out.empty()) out += " + ";
    out += "(" + rf_render(f, d.names) + ")*" + coxeter::to_string(d.W, w);
  }
  return out;
}

}  // namespace hf::skew
