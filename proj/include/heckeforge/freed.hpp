// Free-word model of the subalgebra generated by the conjugated
// Demazure generators: adjacent-repeat-free words with integer
// coefficients, the W-action, and the twisted derivations d_k.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "heckeforge/coxeter.hpp"

namespace hf::freed {

// Letters are reflection indices 1..m; no two adjacent letters equal.
// The empty word is the unit.  Degree = length.
using Word = std::vector<uint8_t>;

// Degree first, then lexicographic: the basis enumeration order.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Sparse integer combination of basis words; zero coefficients never stored.
using FreeDElement = std::map<Word, mpz_class, WordLess>;

FreeDElement fd_zero();
FreeDElement fd_one();
FreeDElement fd_int(const mpz_class& c);
FreeDElement fd_gen(int k);
FreeDElement fd_word(Word w);

void fd_add_term(FreeDElement& a, const Word& w, const mpz_class& c);
FreeDElement fd_add(const FreeDElement& a, const FreeDElement& b);
FreeDElement fd_sub(const FreeDElement& a, const FreeDElement& b);
FreeDElement fd_neg(const FreeDElement& a);
FreeDElement fd_scale(const FreeDElement& a, const mpz_class& c);

// Concatenation with the single-boundary collapse D_k D_k = D_k.
FreeDElement fd_mul(const FreeDElement& a, const FreeDElement& b);

bool fd_is_zero(const FreeDElement& a);
int fd_degree(const FreeDElement& a);  // 0 for constants and zero

// Coefficient of the empty word.
mpz_class counit(const FreeDElement& a);

// Module-algebra action: each letter k maps to the transported generator
// k' = conj_action(w, k), as D_k' on an ascent and 1 - D_k' on a descent,
// multiplied out left to right.
FreeDElement fd_act(const coxeter::DihedralDatum& W, coxeter::GroupElement w,
                    const FreeDElement& a);

// Twisted derivation: d_k(D_k') = delta_{k k'} extended by the Leibniz
// rule d_k(x y) = d_k(x) y + r_k(x) d_k(y), r_k the k-th reflection.
FreeDElement derivation(const coxeter::DihedralDatum& W, int k,
                        const FreeDElement& a);

// All adjacent-repeat-free words of length <= maxdeg in WordLess order.
std::vector<Word> word_basis(int m, int maxdeg);
size_t word_count(int m, int maxdeg);
// Index of w in word_basis(m, *) order.
size_t rank_word(int m, const Word& w);

// Text form: integer-coefficient sums of words "2 D1 D3 - D3 D1 + 1".
// Letters up to m are accepted; products by juxtaposition or '*'.
FreeDElement fd_parse(int m, std::string_view src);
std::string fd_render(const FreeDElement& a);

}  // namespace hf::freed
