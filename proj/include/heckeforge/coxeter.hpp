// Rank-2 (dihedral) Coxeter groups I2(m) with reflection bookkeeping.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hf::coxeter {

// Dihedral group of order 2m on generators s1, s2, 2 <= m <= 6.
struct DihedralDatum {
  int m;
  explicit DihedralDatum(int m_);
};

// Every element is rot^k * flip^e, where rot = s2*s1 and flip = s1.
// In this normal form s1 = (0, true) and s2 = (1, true).
struct GroupElement {
  int rot = 0;
  bool flip = false;
  auto operator<=>(const GroupElement&) const = default;
};

inline GroupElement identity() { return {0, false}; }
inline GroupElement gen_s1() { return {0, true}; }
inline GroupElement gen_s2() { return {1, true}; }
GroupElement gen(int i);  // i in {1,2}

GroupElement mul(const DihedralDatum& W, GroupElement a, GroupElement b);
GroupElement inverse(const DihedralDatum& W, GroupElement a);

// Coxeter length; table built once per m by breadth-first search and cached.
int length(const DihedralDatum& W, GroupElement a);

// All 2m elements in a fixed deterministic order (by length, then rot, flip).
const std::vector<GroupElement>& elements(const DihedralDatum& W);

// k-th reflection r_k = s1 s2 s1 ... (2k-1 alternating letters), 1 <= k <= m.
// r_1 = s1 and r_m = s2.
GroupElement reflection(const DihedralDatum& W, int k);
// Index k with reflection(W, k) == r; throws if r is not a reflection.
int reflection_index(const DihedralDatum& W, GroupElement r);

struct ConjAction {
  int k;         // index of w r_k w^{-1}
  bool flipped;  // true iff length(w * r_k) < length(w)
};
ConjAction conj_action(const DihedralDatum& W, GroupElement w, int k);

// Product of generators; letters are 1 or 2.
GroupElement word_to_element(const DihedralDatum& W, std::span<const int> letters);
// One reduced word for a (lexicographically smallest among the reduced words).
std::vector<int> reduced_word(const DihedralDatum& W, GroupElement a);

// Render as "e" or "s1 s2 s1" using reduced_word.
std::string to_string(const DihedralDatum& W, GroupElement a);

}  // namespace hf::coxeter
