#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heckeforge/skew.hpp"

using namespace hf::skew;
using namespace hf::exact;
using hf::coxeter::GroupElement;
using hf::coxeter::identity;
using hf::coxeter::reflection;
using hf::expr::parse;

namespace {

SkewElement ev_str(const char* src, const DemazureDatum& d) {
  return eval(parse(src), d);
}

bool zero_str(const char* src, const DemazureDatum& d) {
  return sk_is_zero(ev_str(src, d));
}

// Expression text for the conjugated generator: the alternating prefix of
// length k-1 wrapped around D1 or D2.
std::string hatD(int k) {
  std::string pre, post;
  for (int j = 1; j < k; ++j) {
    std::string s = "s" + std::to_string(j % 2 == 1 ? 1 : 2) + " ";
    pre += s;
    post = s + post;
  }
  return pre + "D" + std::to_string(k % 2 == 1 ? 1 : 2) + " " + post;
}

}  // namespace

TEST_CASE("parser shapes") {
  auto e = parse("D2 s1 s2 D1");
  CHECK(e->kind == hf::expr::Kind::Prod);
  CHECK(hf::expr::to_string(e) == "D2 s1 s2 D1");
  auto diff = parse("D1 D2 D1 D2 - D2 D1 D2 D1");
  CHECK(diff->kind == hf::expr::Kind::Diff);
  auto lam = parse("X[1,-2]");
  CHECK(lam->kind == hf::expr::Kind::LatticeX);
  CHECK(lam->lam == std::array<int, 2>{1, -2});
  CHECK(hf::expr::to_string(parse("3 (s1 - 1) * q2")) == "3 (s1 - 1) q2");
  CHECK_THROWS_WITH_AS(parse("D3"), doctest::Contains("offset 0"),
                       std::runtime_error);
  CHECK_THROWS(parse("s1 +"));
  CHECK_THROWS(parse("X[1 2]"));
  CHECK_THROWS(parse("(s1"));
}

TEST_CASE("builtin data and validation") {
  CHECK(builtin_datum("A1xA1").W.m == 2);
  CHECK(builtin_datum("A2").W.m == 3);
  CHECK(builtin_datum("B2").W.m == 4);
  CHECK(builtin_datum("G2").W.m == 6);
  CHECK_THROWS(builtin_datum("F4"));
  // Cartan/m mismatch and sign violations are rejected.
  CHECK_THROWS(make_datum(4, -1, -1, cartan_action(3, -1, -1),
                          {ev(1, 0), ev(0, 1)}, {"t1", "t2"}));
  CHECK_THROWS(make_datum(2, 0, -1, cartan_action(2, 0, 0),
                          {ev(1, 0), ev(0, 1)}, {"t1", "t2"}));
}

TEST_CASE("rank-1 relations hold in the image") {
  for (const char* name : {"A1xA1", "A2", "B2", "G2"}) {
    auto d = builtin_datum(name);
    for (int i = 1; i <= 2; ++i) {
      auto Di = demazure(d, i);
      CHECK(sk_eq(sk_mul(d, Di, Di), Di));
      std::string si = "s" + std::to_string(i), Ds = "D" + std::to_string(i);
      std::string rel = si + " " + Ds + " + " + Ds + " " + si + " - " + si + " + 1";
      CHECK(zero_str(rel.c_str(), d));
    }
  }
}

TEST_CASE("braid images agree") {
  for (const char* name : {"A1xA1", "A2", "B2", "G2"}) {
    auto d = builtin_datum(name);
    std::string lhs, rhs;
    for (int j = 0; j < d.W.m; ++j) {
      lhs += j % 2 == 0 ? "s1 " : "s2 ";
      rhs += j % 2 == 0 ? "s2 " : "s1 ";
    }
    CHECK(sk_eq(ev_str(lhs.c_str(), d), ev_str(rhs.c_str(), d)));
  }
}

TEST_CASE("A1xA1 commutation relations") {
  auto d = builtin_datum("A1xA1");
  CHECK(zero_str("D2 s1 - s1 D2", d));
  CHECK(zero_str("D1 s2 - s2 D1", d));
  CHECK(zero_str("D1 D2 - D2 D1", d));
}

TEST_CASE("A2 relations") {
  auto d = builtin_datum("A2");
  CHECK(zero_str("D1 s2 s1 - s2 s1 D2", d));
  CHECK(zero_str("D2 s1 D2 - s1 D2 D1 - D1 D2 s1 - s1 D2 s1", d));
}

TEST_CASE("B2 linear braid relation and braid difference") {
  auto d = builtin_datum("B2");
  CHECK(zero_str("D1 s2 s1 s2 - s2 s1 s2 D1", d));
  CHECK(zero_str("D2 s1 s2 s1 - s1 s2 s1 D2", d));
  CHECK(zero_str("D1 D2 D1 D2 - D2 D1 D2 D1", d));
}

TEST_CASE("B2 inversion identity in two forms") {
  auto d = builtin_datum("B2");
  // hatD2 + hatD3 + hatD4 hatD1 - hatD1 hatD2 - hatD2 hatD3 - hatD3 hatD4.
  std::string h2 = "(s1 D2 s1)", h3 = "(s2 D1 s2)";
  std::string lemma = h2 + " + " + h3 + " + D2 D1 - D1 " + h2 + " - " + h2 +
                      " " + h3 + " - " + h3 + " D2";
  CHECK(zero_str(lemma.c_str(), d));
  CHECK(zero_str(
      "D2 s1 s2 D1 - (D1 D2 s1 s2 + s1 D2 D1 s2 + s1 s2 D1 D2 + s1 s2 D1 s2 "
      "+ s1 D2 s1 s2)",
      d));
}

TEST_CASE("B2 four-letter symmetry of conjugated generators") {
  auto d = builtin_datum("B2");
  std::string lhs, rhs;
  for (int k = 1; k <= 4; ++k) lhs += "(" + hatD(k) + ") ";
  for (int k = 4; k >= 1; --k) rhs += "(" + hatD(k) + ") ";
  CHECK(sk_eq(ev_str(lhs.c_str(), d), ev_str(rhs.c_str(), d)));
}

TEST_CASE("G2 commuting pair") {
  auto d = builtin_datum("G2");
  // hatD3 and hatD6 = D2 commute in the image.
  std::string h3 = "(" + hatD(3) + ")";
  std::string rel = h3 + " D2 - D2 " + h3;
  CHECK(zero_str(rel.c_str(), d));
}

TEST_CASE("conjugated generators transport tau") {
  for (const char* name : {"A1xA1", "A2", "B2", "G2"}) {
    auto d = builtin_datum(name);
    for (int k = 1; k <= d.W.m; ++k) {
      auto img = ev_str(hatD(k).c_str(), d);
      std::vector<int> prefix;
      for (int j = 1; j < k; ++j) prefix.push_back(j % 2 == 1 ? 1 : 2);
      auto w = word_to_element(d.W, prefix);
      RatFunc tau =
          rf_act(d.action, d.W, w, rf_tau(d.v[k % 2 == 1 ? 0 : 1]));
      auto expect = sk_sub(sk_term(identity(), tau),
                           sk_term(reflection(d.W, k), tau));
      CHECK(sk_eq(img, expect));
    }
  }
}

TEST_CASE("demazure operators act on the coefficient field") {
  auto d = builtin_datum("B2");
  auto D1 = demazure(d, 1), D2 = demazure(d, 2);
  // D1(t2) = t2 (1 + t1) and D_i(1) = 0.
  LaurentPoly expect = lp_monomial(ev(0, 1));
  lp_add_term(expect, ev(1, 1), 1);
  CHECK(rf_eq(sk_apply(d, D1, rf_poly(lp_monomial(ev(0, 1)))),
              rf_poly(expect)));
  CHECK(rf_is_zero(sk_apply(d, D1, rf_int(1))));
  CHECK(rf_is_zero(sk_apply(d, D2, rf_int(1))));
  // The module-algebra law (x y)(f) = x(y(f)) for the images.
  auto f = rf_tau(ev(1, 1));
  CHECK(rf_eq(sk_apply(d, sk_mul(d, D1, D2), f),
              sk_apply(d, D1, sk_apply(d, D2, f))));
}

TEST_CASE("product associativity on random elements") {
  auto d = builtin_datum("B2");
  std::mt19937_64 rng(404917);
  std::uniform_int_distribution<int> pick(0, 3);
  auto rand_elt = [&]() {
    const char* atoms[] = {"D1", "D2", "s1 D2 s1", "s2 - 1"};
    return ev_str(atoms[pick(rng)], d);
  };
  for (int trial = 0; trial < 15; ++trial) {
    auto a = rand_elt(), b = rand_elt(), c = rand_elt();
    CHECK(sk_eq(sk_mul(d, sk_mul(d, a, b), c), sk_mul(d, a, sk_mul(d, b, c))));
  }
}

TEST_CASE("lattice atoms require a lattice datum") {
  auto d = builtin_datum("B2");
  CHECK_THROWS(ev_str("X[1,0]", d));
  CHECK_THROWS(ev_str("q1", d));
}

TEST_CASE("json rendering") {
  auto d = builtin_datum("B2");
  auto j = sk_to_json(d, demazure(d, 1));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["word"] == "e");
  CHECK(j[0]["coeff_num"] == "1");
  CHECK(j[0]["coeff_den_factors"][0] == "1 - 1*t1");
  CHECK(j[1]["word"] == "s1");
  CHECK(j[1]["coeff_num"] == "-1");
}
