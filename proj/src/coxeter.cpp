#include "heckeforge/coxeter.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <stdexcept>

namespace hf::coxeter {

namespace {

int norm_rot(int r, int m) {
  r %= m;
  return r < 0 ? r + m : r;
}

struct GroupTables {
  std::vector<GroupElement> elems;        // sorted by (length, rot, flip)
  std::map<GroupElement, int> len;
  std::map<GroupElement, std::vector<int>> word;  // lex-smallest reduced word
  std::vector<GroupElement> refl;         // refl[k-1] = r_k
  std::map<GroupElement, int> refl_index;
};

GroupElement raw_mul(int m, GroupElement a, GroupElement b) {
  // (rot^r flip^f)(rot^r' flip^f'): flip conjugates rot to rot^{-1}.
  int r = norm_rot(a.rot + (a.flip ? -b.rot : b.rot), m);
  return {r, a.flip != b.flip};
}

const GroupTables& tables(int m) {
  static std::map<int, GroupTables> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  GroupTables t;
  // Breadth-first search from the identity, trying s1 before s2 so the
  // recorded reduced words are lexicographically smallest.
  t.len[identity()] = 0;
  t.word[identity()] = {};
  std::vector<GroupElement> frontier{identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : frontier) {
      for (int i = 1; i <= 2; ++i) {
        GroupElement h = raw_mul(m, g, i == 1 ? gen_s1() : gen_s2());
        if (t.len.contains(h)) continue;
        t.len[h] = t.len[g] + 1;
        auto w = t.word[g];
        w.push_back(i);
        t.word[h] = std::move(w);
        next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  assert(t.len.size() == size_t(2 * m));

  for (const auto& [g, l] : t.len) t.elems.push_back(g);
  std::sort(t.elems.begin(), t.elems.end(),
            [&](GroupElement a, GroupElement b) {
              int la = t.len.at(a), lb = t.len.at(b);
              if (la != lb) return la < lb;
              if (a.rot != b.rot) return a.rot < b.rot;
              return a.flip < b.flip;
            });

  for (int k = 1; k <= m; ++k) {
    GroupElement r = identity();
    for (int j = 0; j < 2 * k - 1; ++j)
      r = raw_mul(m, r, j % 2 == 0 ? gen_s1() : gen_s2());
    t.refl.push_back(r);
    t.refl_index[r] = k;
  }
  assert(int(t.refl_index.size()) == m);

  return cache.emplace(m, std::move(t)).first->second;
}

}  // namespace

DihedralDatum::DihedralDatum(int m_) : m(m_) {
  if (m < 2 || m > 6)
    throw std::invalid_argument("DihedralDatum: m must be between 2 and 6");
}

GroupElement gen(int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("gen: index must be 1 or 2");
  return i == 1 ? gen_s1() : gen_s2();
}

GroupElement mul(const DihedralDatum& W, GroupElement a, GroupElement b) {
  return raw_mul(W.m, a, b);
}

GroupElement inverse(const DihedralDatum& W, GroupElement a) {
  // Flips are involutions; pure rotations invert the rotation.
  if (a.flip) return a;
  return {norm_rot(-a.rot, W.m), false};
}

int length(const DihedralDatum& W, GroupElement a) {
  return tables(W.m).len.at(a);
}

const std::vector<GroupElement>& elements(const DihedralDatum& W) {
  return tables(W.m).elems;
}

GroupElement reflection(const DihedralDatum& W, int k) {
  if (k < 1 || k > W.m)
    throw std::invalid_argument("reflection: k out of range");
  return tables(W.m).refl[k - 1];
}

int reflection_index(const DihedralDatum& W, GroupElement r) {
  const auto& t = tables(W.m);
  auto it = t.refl_index.find(r);
  if (it == t.refl_index.end())
    throw std::invalid_argument("reflection_index: not a reflection");
  return it->second;
}

ConjAction conj_action(const DihedralDatum& W, GroupElement w, int k) {
  GroupElement r = reflection(W, k);
  GroupElement c = mul(W, mul(W, w, r), inverse(W, w));
  return {reflection_index(W, c),
          length(W, mul(W, w, r)) < length(W, w)};
}

GroupElement word_to_element(const DihedralDatum& W, std::span<const int> letters) {
  GroupElement g = identity();
  for (int i : letters) g = mul(W, g, gen(i));
  return g;
}

std::vector<int> reduced_word(const DihedralDatum& W, GroupElement a) {
  return tables(W.m).word.at(a);
}

std::string to_string(const DihedralDatum& W, GroupElement a) {
  auto w = reduced_word(W, a);
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i] == 1 ? "s1" : "s2";
  }
  return s;
}

}  // namespace hf::coxeter
