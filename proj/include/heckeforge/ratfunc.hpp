// Rational functions with Laurent numerators and (1 - t^v) denominators.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heckeforge/coxeter.hpp"
#include "heckeforge/laurent.hpp"

namespace hf::exact {

// W-action on the exponent lattice by per-generator integer matrices.
struct MonomialAction {
  int m;
  Mat g1, g2;
};

// Validates g1^2 = g2^2 = 1 and that g1 g2 has order exactly m.
MonomialAction make_action(int m, const Mat& g1, const Mat& g2);

// Rank-2 Cartan action on t1, t2: column j of M_i is e_j - a_ij e_i,
// so s_i(t_i) = t_i^-1 and s_i(t_j) = t_i^-a_ij t_j.
MonomialAction cartan_action(int m, int a12, int a21);

// Matrix of w, the product of generator matrices along a reduced word.
Mat action_matrix(const MonomialAction& A, const coxeter::DihedralDatum& W,
                  coxeter::GroupElement w);

// num / prod (1 - t^v)^mult.  Every factor vector is normalized so its
// first nonzero entry is positive, via 1/(1-t^-u) = -t^u/(1-t^u), and no
// factor divides the numerator.  Zero iff num is empty.
struct RatFunc {
  LaurentPoly num;
  std::map<ExpVec, int> den;
};

RatFunc rf_zero();
RatFunc rf_int(const mpz_class& c);
RatFunc rf_poly(LaurentPoly f);
// tau(v) = 1/(1 - t^v); throws for v = 0.
RatFunc rf_tau(ExpVec v);

RatFunc rf_add(const RatFunc& f, const RatFunc& g);
RatFunc rf_sub(const RatFunc& f, const RatFunc& g);
RatFunc rf_mul(const RatFunc& f, const RatFunc& g);
RatFunc rf_neg(const RatFunc& f);
bool rf_is_zero(const RatFunc& f);
bool rf_eq(const RatFunc& f, const RatFunc& g);

// w(f): exponent substitution on numerator and denominator factors.
RatFunc rf_act(const MonomialAction& A, const coxeter::DihedralDatum& W,
               coxeter::GroupElement w, const RatFunc& f);

// Evaluation modulo p; nullopt when a denominator factor vanishes.
std::optional<int64_t> rf_eval_mod(const RatFunc& f,
                                   const std::array<int64_t, kMaxVars>& pt,
                                   int64_t p);

// "num / ((1-t1)*(1-t1*t2)^2)"; plain numerator when the denominator is 1.
std::string rf_render(const RatFunc& f, const std::vector<std::string>& names);

}  // namespace hf::exact
