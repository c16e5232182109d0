#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "heckeforge/coxeter.hpp"
#include "heckeforge/freed.hpp"
#include "heckeforge/ideal.hpp"
#include "heckeforge/kernel.hpp"

using hf::coxeter::DihedralDatum;
using hf::freed::FreeDElement;
using hf::freed::Word;
using hf::ideal::Verdict;
namespace fd = hf::freed;
namespace id = hf::ideal;
namespace kn = hf::kernel;

namespace {

// the three counterexample elements, in the tilde-generator letters
const char* kG2Elements[3] = {
    "D6 D1 D6 D3 - D6 D2 D1 D3 + D6 D2 D3 - D6 D3 D2 D3 + D6 D3 "
    "- D1 D6 D1 D6 + D1 D6 D2 D1 - D1 D6 D2 + D1 D6 D3 D2 - D1 D6 D3 "
    "- D2 D1 D2 D1 + D2 D1 + D2 D1 D2 - D2 - D2 D1 D3 D2 "
    "+ D2 D3 D2 + D2 D1 D3 - D2 D3 "
    "- D3 D2 D3 D2 + D3 D2 + D3 D2 D3 - D3",
    "D2 D6 D1 D6 - D2 D1 D2 D6 + D2 D6 + D1 D6 D2 D6 "
    "- D6 D2 D6 D1 + D6 D2 D1 D2 - D6 D2 - D6 D1 D6 D2",
    "D5 D1 D6 D1 - D5 D6 D5 D1 + D5 D1 + D6 D1 D5 D1 "
    "- D1 D5 D1 D6 + D1 D5 D6 D5 - D1 D5 - D1 D6 D1 D5",
};

bool family_contains(const std::vector<FreeDElement>& fam,
                     const FreeDElement& x) {
  const FreeDElement neg = fd::fd_neg(x);
  return std::any_of(fam.begin(), fam.end(), [&](const FreeDElement& g) {
    return g == x || g == neg;
  });
}

}  // namespace

TEST_CASE("conjectured family: commuting case collapses to the commutator") {
  const auto fam = id::conj133_family(2);
  REQUIRE(fam.size() == 1);
  CHECK(fam[0] == fd::fd_parse(2, "D1 D2 - D2 D1"));
}

TEST_CASE("conjectured family: quadratic-linear example at m=4") {
  const auto fam = id::conj133_family(4);
  const FreeDElement e =
      fd::fd_parse(4, "D1 D4 - D2 D1 - D3 D2 - D4 D3 + D2 + D3");
  CHECK(family_contains(fam, e));
  // braid difference is always present
  CHECK(family_contains(fam, fd::fd_parse(4, "D1 D4 D1 D4 - D4 D1 D4 D1")));
}

TEST_CASE("conjectured family lies in the kernel for crystallographic m") {
  for (int m : {2, 3, 4, 6}) {
    CAPTURE(m);
    const DihedralDatum W{m};
    const auto fam = id::conj133_family(m);
    REQUIRE(!fam.empty());
    for (const auto& g : fam) {
      CHECK(kn::in_kernel(W, g, fd::fd_degree(g)));
    }
  }
}

TEST_CASE("conjectured family rejects out-of-range m") {
  CHECK_THROWS_AS(id::conj133_family(1), std::invalid_argument);
  CHECK_THROWS_AS(id::conj133_family(7), std::invalid_argument);
}

TEST_CASE("default truncation degree") {
  CHECK(id::default_maxdeg(fd::fd_parse(4, "D1 D3 - D3 D1"), 4) == 4);
  CHECK(id::default_maxdeg(fd::fd_parse(6, "D1 D3 - D3 D1"), 6) == 6);
  CHECK(id::default_maxdeg(fd::fd_parse(2, "D1 D2 D1 D2 D1"), 2) == 5);
}

TEST_CASE("membership: edge cases and validation") {
  const std::vector<FreeDElement> gens = {fd::fd_parse(2, "D1 D2 - D2 D1")};
  // the zero target has the empty certificate
  auto r0 = id::ideal_member(2, fd::fd_zero(), gens, 2);
  CHECK(r0.verdict == Verdict::kFound);
  CHECK(r0.cert.triples.empty());
  // a generator is found as itself
  auto r1 = id::ideal_member(2, gens[0], gens, 2);
  REQUIRE(r1.verdict == Verdict::kFound);
  REQUIRE(r1.cert.triples.size() == 1);
  CHECK(r1.cert.triples[0].u.empty());
  CHECK(r1.cert.triples[0].v.empty());
  CHECK(r1.cert.triples[0].c == 1);
  // degree-1 elements are not in the ideal
  CHECK(id::ideal_member(2, fd::fd_gen(1), gens, 3).verdict ==
        Verdict::kNotFound);
  // validation
  CHECK_THROWS_AS(id::ideal_member(7, fd::fd_zero(), gens, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(id::ideal_member(2, fd::fd_parse(2, "D1 D2 D1"), gens, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      id::ideal_member(2, fd::fd_zero(), {fd::fd_zero()}, 2),
      std::invalid_argument);
}

TEST_CASE("membership: kernel element against the kernel lattice") {
  const auto kb = kn::kernel_K12(4, 4);
  std::vector<FreeDElement> gens = kb.basis;
  const FreeDElement target = fd::fd_parse(4, "D1 D3 - D3 D1");
  const auto r = id::ideal_member(4, target, gens, 4);
  CHECK(r.verdict == Verdict::kFound);
  CHECK(id::replay(r.cert, gens) == target);
}

TEST_CASE("membership: random ideal combinations are recovered") {
  std::mt19937 rng(555444333);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto kb = kn::kernel_K12(3, 3);
  REQUIRE(!kb.basis.empty());
  const std::vector<FreeDElement> gens = kb.basis;
  const std::vector<Word> words = fd::word_basis(3, 2);
  std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<size_t> pickg(0, gens.size() - 1);
  int built = 0;
  for (int trial = 0; trial < 60 && built < 12; ++trial) {
    FreeDElement target = fd::fd_zero();
    for (int t = 0; t < 3; ++t) {
      const Word& u = words[pick(rng)];
      const Word& v = words[pick(rng)];
      const FreeDElement prod = fd::fd_mul(
          fd::fd_word(u), fd::fd_mul(gens[pickg(rng)], fd::fd_word(v)));
      target = fd::fd_add(target, fd::fd_scale(prod, coeff(rng)));
    }
    if (fd::fd_degree(target) > 4) continue;
    ++built;
    const auto r = id::ideal_member(3, target, gens, 4);
    CHECK(r.verdict == Verdict::kFound);
    CHECK(id::replay(r.cert, gens) == target);
  }
  CHECK(built >= 8);
}

TEST_CASE("quartic case: every kernel basis vector has a family certificate") {
  const auto kb = kn::kernel_K12(4, 4);
  const auto fam = id::conj133_family(4);
  REQUIRE(!kb.basis.empty());
  for (const auto& x : kb.basis) {
    int maxdeg = id::default_maxdeg(x, 4);
    auto r = id::ideal_member(4, x, fam, maxdeg);
    if (r.verdict != Verdict::kFound) {
      maxdeg = 6;
      r = id::ideal_member(4, x, fam, maxdeg);
    }
    CAPTURE(fd::fd_render(x));
    CHECK(r.verdict == Verdict::kFound);
    CHECK(id::replay(r.cert, fam) == x);
    for (const auto& t : r.cert.triples) {
      const FreeDElement prod = fd::fd_mul(
          fd::fd_word(t.u), fd::fd_mul(fam[t.gen], fd::fd_word(t.v)));
      CHECK(fd::fd_degree(prod) <= maxdeg);
    }
  }
}

TEST_CASE("sextic case: counterexample elements are not in the family span") {
  const DihedralDatum W{6};
  const auto fam = id::conj133_family(6);
  for (const char* src : kG2Elements) {
    const FreeDElement x = fd::fd_parse(6, src);
    REQUIRE(kn::in_kernel(W, x, 4));
    const auto r = id::ideal_member(6, x, fam, 6);
    CHECK(r.verdict == Verdict::kNotFound);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->pairing != 0);
  }
}
