#include "heckeforge/smash.hpp"

#include <stdexcept>

namespace hf::freed {

using coxeter::DihedralDatum;
using coxeter::GroupElement;

SmashElement smash_zero() { return {}; }

SmashElement smash_int(const mpz_class& c) {
  SmashElement a;
  if (c != 0) a.part.emplace(coxeter::identity(), fd_int(c));
  return a;
}

SmashElement smash_group(GroupElement w) {
  SmashElement a;
  a.part.emplace(w, fd_one());
  return a;
}

SmashElement smash_fd(FreeDElement x) {
  SmashElement a;
  if (!fd_is_zero(x)) a.part.emplace(coxeter::identity(), std::move(x));
  return a;
}

namespace {

void put(SmashElement& a, GroupElement w, const FreeDElement& x) {
  if (fd_is_zero(x)) return;
  auto it = a.part.find(w);
  if (it == a.part.end()) {
    a.part.emplace(w, x);
  } else {
    it->second = fd_add(it->second, x);
    if (fd_is_zero(it->second)) a.part.erase(it);
  }
}

// s_i * (single word), recursively: for w = D_k y,
//   s_i D_k y = s_i(D_k) (s_i y) - [r_k = s_i] y.
SmashElement push_letter_word(const DihedralDatum& W, int i, const Word& w) {
  if (w.empty()) return smash_group(coxeter::gen(i));
  int k = w[0];
  Word rest(w.begin() + 1, w.end());
  SmashElement tail = push_letter_word(W, i, rest);
  FreeDElement acted = fd_act(W, coxeter::gen(i), fd_gen(k));
  SmashElement out;
  for (const auto& [u, z] : tail.part) put(out, u, fd_mul(acted, z));
  if (reflection(W, k) == coxeter::gen(i))
    put(out, coxeter::identity(), fd_neg(fd_word(rest)));
  return out;
}

SmashElement push_letter(const DihedralDatum& W, int i, const FreeDElement& x) {
  SmashElement out;
  for (const auto& [w, c] : x) {
    SmashElement term = push_letter_word(W, i, w);
    for (const auto& [u, z] : term.part) put(out, u, fd_scale(z, c));
  }
  return out;
}

// Normal form of w * x.
SmashElement push_group(const DihedralDatum& W, GroupElement w,
                        const FreeDElement& x) {
  auto letters = reduced_word(W, w);
  SmashElement acc = smash_fd(x);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    SmashElement next;
    for (const auto& [u, z] : acc.part) {
      SmashElement pushed = push_letter(W, *it, z);
      for (const auto& [g, y] : pushed.part) put(next, mul(W, g, u), y);
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

SmashElement smash_add(const SmashElement& a, const SmashElement& b) {
  SmashElement c = a;
  for (const auto& [w, x] : b.part) put(c, w, x);
  return c;
}

SmashElement smash_sub(const SmashElement& a, const SmashElement& b) {
  SmashElement c = a;
  for (const auto& [w, x] : b.part) put(c, w, fd_neg(x));
  return c;
}

SmashElement smash_neg(const SmashElement& a) {
  SmashElement c;
  for (const auto& [w, x] : a.part) c.part.emplace(w, fd_neg(x));
  return c;
}

SmashElement smash_mul(const DihedralDatum& W, const SmashElement& a,
                       const SmashElement& b) {
  SmashElement c;
  for (const auto& [w, x] : a.part)
    for (const auto& [v, y] : b.part) {
      SmashElement mid = push_group(W, w, y);
      for (const auto& [u, z] : mid.part)
        put(c, mul(W, u, v), fd_mul(x, z));
    }
  return c;
}

bool smash_is_zero(const SmashElement& a) { return a.part.empty(); }

bool smash_eq(const SmashElement& a, const SmashElement& b) {
  return smash_is_zero(smash_sub(a, b));
}

mpz_class smash_counit(const SmashElement& a) {
  mpz_class c = 0;
  for (const auto& [w, x] : a.part) c += counit(x);
  return c;
}

SmashElement smash_from_expr(const DihedralDatum& W, const expr::ExprPtr& e) {
  using expr::Kind;
  switch (e->kind) {
    case Kind::Sum:
      return smash_add(smash_from_expr(W, e->lhs), smash_from_expr(W, e->rhs));
    case Kind::Diff:
      return smash_sub(smash_from_expr(W, e->lhs), smash_from_expr(W, e->rhs));
    case Kind::Prod:
      return smash_mul(W, smash_from_expr(W, e->lhs),
                       smash_from_expr(W, e->rhs));
    case Kind::IntLit:
      return smash_int(e->lit);
    case Kind::GenS:
      return smash_group(coxeter::gen(e->index));
    case Kind::GenD:
      return smash_fd(fd_gen(e->index == 1 ? 1 : W.m));
    default:
      throw std::invalid_argument("expression atom outside the presentation");
  }
}

SmashElement smash_normal_form(const DihedralDatum& W, std::string_view src) {
  return smash_from_expr(W, expr::parse(src));
}

std::string smash_render(const DihedralDatum& W, const SmashElement& a) {
  if (a.part.empty()) return "0";
  std::string out;
  for (const auto& [w, x] : a.part) {
    if (!out.empty()) out += " + ";
    out += "(" + fd_render(x) + ")*" + coxeter::to_string(W, w);
  }
  return out;
}

}  // namespace hf::freed
