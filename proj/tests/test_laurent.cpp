#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heckeforge/laurent.hpp"

using namespace hf::exact;

namespace {

std::mt19937_64 rng(20240517);

LaurentPoly random_poly(int nvars, int nterms, int maxexp) {
  std::uniform_int_distribution<int> exp(-maxexp, maxexp), coeff(-5, 5);
  LaurentPoly f;
  for (int i = 0; i < nterms; ++i) {
    ExpVec v;
    for (int j = 0; j < nvars; ++j) v.e[j] = exp(rng);
    lp_add_term(f, v, coeff(rng));
  }
  return f;
}

ExpVec random_dir(int nvars, int maxexp) {
  std::uniform_int_distribution<int> exp(-maxexp, maxexp);
  ExpVec v;
  while (ev_is_zero(v))
    for (int j = 0; j < nvars; ++j) v.e[j] = exp(rng);
  return v;
}

}  // namespace

TEST_CASE("small products") {
  LaurentPoly one = lp_int(1);
  LaurentPoly t1 = lp_monomial(ev(1, 0));
  CHECK(lp_mul(lp_add(one, t1), lp_sub(one, t1)) ==
        lp_sub(one, lp_monomial(ev(2, 0))));
  CHECK(lp_is_zero(lp_sub(lp_mul(t1, t1), lp_monomial(ev(2, 0)))));
}

TEST_CASE("ring axioms on random polynomials") {
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(3, 5, 4), b = random_poly(3, 5, 4),
         c = random_poly(3, 5, 4);
    CHECK(lp_mul(a, b) == lp_mul(b, a));
    CHECK(lp_mul(a, lp_mul(b, c)) == lp_mul(lp_mul(a, b), c));
    CHECK(lp_mul(a, lp_add(b, c)) == lp_add(lp_mul(a, b), lp_mul(a, c)));
    CHECK(lp_is_zero(lp_add(a, lp_neg(a))));
  }
}

TEST_CASE("division by 1 - t^v round-trips") {
  for (int trial = 0; trial < 200; ++trial) {
    auto q = random_poly(3, 6, 3);
    auto v = random_dir(3, 2);
    LaurentPoly factor = lp_sub(lp_int(1), lp_monomial(v));
    auto back = lp_divide_one_minus(lp_mul(q, factor), v);
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
}

TEST_CASE("divisibility of binomials is decided exactly") {
  // 1 - t^w is divisible by 1 - t^v precisely when w is a nonzero
  // integer multiple of v (negative multiples included).
  for (int trial = 0; trial < 200; ++trial) {
    auto v = random_dir(3, 2);
    auto w = random_dir(3, 4);
    LaurentPoly f = lp_sub(lp_int(1), lp_monomial(w));
    auto q = lp_divide_one_minus(f, v);
    bool multiple = false;
    for (int k = -6; k <= 6; ++k) {
      if (k == 0) continue;
      ExpVec kv;
      for (int i = 0; i < kMaxVars; ++i) kv.e[i] = k * v.e[i];
      if (kv == w) multiple = true;
    }
    CHECK(q.has_value() == multiple);
    if (q)
      CHECK(lp_mul(*q, lp_sub(lp_int(1), lp_monomial(v))) == f);
  }
  // A single monomial is never divisible.
  CHECK_FALSE(lp_divide_one_minus(lp_monomial(ev(2, 1)), ev(1, 0)).has_value());
}

TEST_CASE("matrix substitution is multiplicative") {
  Mat M;
  M.a[0][0] = -1;
  M.a[0][1] = 2;
  M.a[1][1] = 1;
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_poly(2, 5, 3), b = random_poly(2, 5, 3);
    CHECK(lp_apply(M, lp_mul(a, b)) == lp_mul(lp_apply(M, a), lp_apply(M, b)));
  }
}

TEST_CASE("evaluation mod p is a ring homomorphism") {
  const int64_t p = 1000000007;
  std::uniform_int_distribution<int64_t> point(1, p - 1);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_poly(3, 5, 4), b = random_poly(3, 5, 4);
    std::array<int64_t, kMaxVars> pt{point(rng), point(rng), point(rng), 1};
    CHECK(lp_eval_mod(lp_mul(a, b), pt, p) ==
          __int128(lp_eval_mod(a, pt, p)) * lp_eval_mod(b, pt, p) % p);
    CHECK(lp_eval_mod(lp_add(a, b), pt, p) ==
          (lp_eval_mod(a, pt, p) + lp_eval_mod(b, pt, p)) % p);
  }
}

TEST_CASE("rendering") {
  CHECK(lp_render(lp_zero(), {"t1", "t2"}) == "0");
  LaurentPoly f = lp_int(3);
  lp_add_term(f, ev(-1, 2), -1);
  CHECK(lp_render(f, {"t1", "t2"}) == "-1*t1^-1*t2^2 + 3");
  LaurentPoly g = lp_monomial(ev(1, 1), 2);
  lp_add_term(g, ev(0, 0), -1);
  CHECK(lp_render(g, {"t1", "t2"}) == "-1 + 2*t1*t2");
}
