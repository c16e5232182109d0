// Normal forms in the cross-product presentation: sums x_w * w with the
// D-part on the left, group part on the right.
#pragma once

#include <map>
#include <string>

#include "heckeforge/coxeter.hpp"
#include "heckeforge/expr.hpp"
#include "heckeforge/freed.hpp"

namespace hf::freed {

struct SmashElement {
  std::map<coxeter::GroupElement, FreeDElement> part;
};

SmashElement smash_zero();
SmashElement smash_int(const mpz_class& c);
SmashElement smash_group(coxeter::GroupElement w);
SmashElement smash_fd(FreeDElement x);

SmashElement smash_add(const SmashElement& a, const SmashElement& b);
SmashElement smash_sub(const SmashElement& a, const SmashElement& b);
SmashElement smash_neg(const SmashElement& a);

// Group letters move right across D-words by the module-algebra action,
// picking up the rank-1 scalar correction s_i D_k = s_i(D_k) s_i - 1
// exactly when r_k = s_i.
SmashElement smash_mul(const coxeter::DihedralDatum& W, const SmashElement& a,
                       const SmashElement& b);

bool smash_is_zero(const SmashElement& a);
bool smash_eq(const SmashElement& a, const SmashElement& b);

// epsilon(w) = 1, epsilon(D-word) = its constant coefficient.
mpz_class smash_counit(const SmashElement& a);

// D1 -> generator 1, D2 -> generator m.  Lattice and q atoms rejected.
SmashElement smash_from_expr(const coxeter::DihedralDatum& W,
                             const expr::ExprPtr& e);
SmashElement smash_normal_form(const coxeter::DihedralDatum& W,
                               std::string_view src);

std::string smash_render(const coxeter::DihedralDatum& W,
                         const SmashElement& a);

}  // namespace hf::freed
