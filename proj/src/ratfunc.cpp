#include "heckeforge/ratfunc.hpp"

#include <stdexcept>

namespace hf::exact {

namespace {

// (1 - t^v) as a polynomial.
LaurentPoly one_minus(ExpVec v) {
  LaurentPoly f = lp_int(1);
  lp_add_term(f, v, -1);
  return f;
}

// Multiply num by whatever rewrites (1 - t^v) as a normalized factor.
ExpVec normalize_factor(ExpVec v, int mult, LaurentPoly& num) {
  if (ev_is_zero(v)) throw std::invalid_argument("denominator factor t^0");
  int pivot = 0;
  while (v.e[pivot] == 0) ++pivot;
  if (v.e[pivot] > 0) return v;
  // 1/(1-t^v)^mult = (-1)^mult t^(-mult v) / (1-t^-v)^mult
  ExpVec u = ev_neg(v);
  ExpVec shift{};
  for (int i = 0; i < kMaxVars; ++i) shift.e[i] = -mult * v.e[i];
  num = lp_mul(num, lp_monomial(shift, mult % 2 == 0 ? 1 : -1));
  return u;
}

// Cancel denominator factors into the numerator until none divides it.
void cancel(RatFunc& f) {
  if (lp_is_zero(f.num)) {
    f.den.clear();
    return;
  }
  bool again = true;
  while (again) {
    again = false;
    for (auto it = f.den.begin(); it != f.den.end();) {
      while (it->second > 0) {
        auto q = lp_divide_one_minus(f.num, it->first);
        if (!q) break;
        f.num = std::move(*q);
        --it->second;
        again = true;
      }
      it = it->second == 0 ? f.den.erase(it) : std::next(it);
    }
  }
}

RatFunc make(LaurentPoly num, std::map<ExpVec, int> den) {
  RatFunc f{std::move(num), std::move(den)};
  cancel(f);
  return f;
}

}  // namespace

MonomialAction make_action(int m, const Mat& g1, const Mat& g2) {
  Mat id;
  if (!(mat_mul(g1, g1) == id) || !(mat_mul(g2, g2) == id))
    throw std::invalid_argument("generator matrix is not involutive");
  Mat p = mat_mul(g1, g2), acc = p;
  for (int k = 1; k < m; ++k) {
    if (acc == id) throw std::invalid_argument("braid order below m");
    acc = mat_mul(acc, p);
  }
  if (!(acc == id)) throw std::invalid_argument("braid order above m");
  return MonomialAction{m, g1, g2};
}

MonomialAction cartan_action(int m, int a12, int a21) {
  Mat g1, g2;
  g1.a[0][0] = -1;
  g1.a[0][1] = -a12;
  g2.a[1][1] = -1;
  g2.a[1][0] = -a21;
  return make_action(m, g1, g2);
}

Mat action_matrix(const MonomialAction& A, const coxeter::DihedralDatum& W,
                  coxeter::GroupElement w) {
  Mat acc;
  for (int i : coxeter::reduced_word(W, w))
    acc = mat_mul(acc, i == 1 ? A.g1 : A.g2);
  return acc;
}

RatFunc rf_zero() { return {}; }

RatFunc rf_int(const mpz_class& c) { return {lp_int(c), {}}; }

RatFunc rf_poly(LaurentPoly f) { return {std::move(f), {}}; }

RatFunc rf_tau(ExpVec v) {
  LaurentPoly num = lp_int(1);
  ExpVec u = normalize_factor(v, 1, num);
  return {std::move(num), {{u, 1}}};
}

RatFunc rf_add(const RatFunc& f, const RatFunc& g) {
  std::map<ExpVec, int> den = f.den;
  for (const auto& [v, k] : g.den)
    den[v] = std::max(den.count(v) ? den[v] : 0, k);
  LaurentPoly a = f.num, b = g.num;
  for (const auto& [v, k] : den) {
    int ka = f.den.count(v) ? f.den.at(v) : 0;
    int kb = g.den.count(v) ? g.den.at(v) : 0;
    for (int i = ka; i < k; ++i) a = lp_mul(a, one_minus(v));
    for (int i = kb; i < k; ++i) b = lp_mul(b, one_minus(v));
  }
  return make(lp_add(a, b), std::move(den));
}

RatFunc rf_sub(const RatFunc& f, const RatFunc& g) {
  return rf_add(f, rf_neg(g));
}

RatFunc rf_mul(const RatFunc& f, const RatFunc& g) {
  std::map<ExpVec, int> den = f.den;
  for (const auto& [v, k] : g.den) den[v] += k;
  return make(lp_mul(f.num, g.num), std::move(den));
}

RatFunc rf_neg(const RatFunc& f) { return {lp_neg(f.num), f.den}; }

bool rf_is_zero(const RatFunc& f) { return lp_is_zero(f.num); }

bool rf_eq(const RatFunc& f, const RatFunc& g) {
  return rf_is_zero(rf_sub(f, g));
}

RatFunc rf_act(const MonomialAction& A, const coxeter::DihedralDatum& W,
               coxeter::GroupElement w, const RatFunc& f) {
  Mat M = action_matrix(A, W, w);
  LaurentPoly num = lp_apply(M, f.num);
  std::map<ExpVec, int> den;
  for (const auto& [v, k] : f.den)
    den[normalize_factor(mat_apply(M, v), k, num)] += k;
  return make(std::move(num), std::move(den));
}

std::optional<int64_t> rf_eval_mod(const RatFunc& f,
                                   const std::array<int64_t, kMaxVars>& pt,
                                   int64_t p) {
  auto inv = [p](int64_t b) {
    int64_t r = 1, k = p - 2;
    while (k) {
      if (k & 1) r = __int128(r) * b % p;
      b = __int128(b) * b % p;
      k >>= 1;
    }
    return r;
  };
  int64_t d = 1;
  for (const auto& [v, k] : f.den) {
    int64_t fac = lp_eval_mod(one_minus(v), pt, p);
    if (fac == 0) return std::nullopt;
    for (int i = 0; i < k; ++i) d = __int128(d) * fac % p;
  }
  return __int128(lp_eval_mod(f.num, pt, p)) * inv(d) % p;
}

std::string rf_render(const RatFunc& f, const std::vector<std::string>& names) {
  std::string num = lp_render(f.num, names);
  if (f.den.empty()) return num;
  std::string den;
  for (const auto& [v, k] : f.den) {
    if (!den.empty()) den += "*";
    den += "(" + lp_render(one_minus(v), names) + ")";
    if (k > 1) den += "^" + std::to_string(k);
  }
  bool wrap = f.num.size() > 1;
  return (wrap ? "(" + num + ")" : num) + " / (" + den + ")";
}

}  // namespace hf::exact
