// Skew group algebra Q x| ZW and the Demazure assignment p_W.
#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "heckeforge/coxeter.hpp"
#include "heckeforge/expr.hpp"
#include "heckeforge/ratfunc.hpp"

#include <json.hpp>

namespace hf::skew {

// Everything needed to interpret expressions through p_W: the group, its
// monomial action on the coefficient field, and the denominator exponent
// v_i of tau_i = 1/(1 - t^{v_i}) for each generator.
struct DemazureDatum {
  coxeter::DihedralDatum W;
  exact::MonomialAction action;
  std::array<exact::ExpVec, 2> v;
  int a12, a21;
  std::vector<std::string> names;     // variable names per exponent slot
  bool lattice = false;               // X[a,b] atoms permitted
  std::array<int, 2> qslot{-1, -1};   // exponent slot of q_i, -1 = absent
};

// Validates m against the Cartan pair: m = 2 + a12 a21 when a12 a21 <= 2,
// m = 6 when a12 a21 = 3.
DemazureDatum make_datum(int m, int a12, int a21, exact::MonomialAction action,
                         std::array<exact::ExpVec, 2> v,
                         std::vector<std::string> names, bool lattice = false,
                         std::array<int, 2> qslot = {-1, -1});

// "A1xA1", "A2", "B2", "G2", acting on t1, t2 with v_i = e_i.
DemazureDatum builtin_datum(std::string_view name);

// Finite sum of rf * w terms; zero coefficients are never stored.
struct SkewElement {
  std::map<coxeter::GroupElement, exact::RatFunc> coeff;
};

SkewElement sk_zero();
SkewElement sk_int(const mpz_class& c);
SkewElement sk_group(coxeter::GroupElement w);
SkewElement sk_term(coxeter::GroupElement w, exact::RatFunc f);
// tau_i * e - tau_i * s_i, the image of D_i.
SkewElement demazure(const DemazureDatum& d, int i);

SkewElement sk_add(const SkewElement& a, const SkewElement& b);
SkewElement sk_sub(const SkewElement& a, const SkewElement& b);
SkewElement sk_neg(const SkewElement& a);
// (f w)(g v) = (f * w(g)) (w v), extended bilinearly.
SkewElement sk_mul(const DemazureDatum& d, const SkewElement& a,
                   const SkewElement& b);

bool sk_is_zero(const SkewElement& a);
bool sk_eq(const SkewElement& a, const SkewElement& b);

// Homomorphic interpretation of an expression tree through p_W.
SkewElement eval(const expr::ExprPtr& e, const DemazureDatum& d);

// Natural action on the coefficient field: (sum f_w w)(g) = sum f_w * w(g).
exact::RatFunc sk_apply(const DemazureDatum& d, const SkewElement& a,
                        const exact::RatFunc& g);

// [{word, coeff_num, coeff_den_factors}] in group-element order.
nlohmann::ordered_json sk_to_json(const DemazureDatum& d,
                                  const SkewElement& a);

std::string sk_render(const DemazureDatum& d, const SkewElement& a);

}  // namespace hf::skew
