#include "heckeforge/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "heckeforge/intlinalg.hpp"

namespace hf::ideal {

using freed::FreeDElement;
using freed::Word;

namespace {

// triple streams beyond this are not echelonized directly
constexpr uint64_t kRowBudget = 2'000'000;
// per-ladder-step cap on the witness search system
constexpr uint64_t kWitnessPairBudget = 4'000'000;
// packed triple ids allot 22 bits to each word rank
constexpr size_t kRankCap = size_t{1} << 22;

int min_term_degree(const FreeDElement& g) {
  return g.empty() ? 0 : static_cast<int>(g.begin()->first.size());
}

FreeDElement product(const Word& u, const FreeDElement& g, const Word& v) {
  return freed::fd_mul(freed::fd_word(u),
                       freed::fd_mul(g, freed::fd_word(v)));
}

uint64_t pack_id(uint32_t gi, size_t ui, size_t vi) {
  return (static_cast<uint64_t>(gi) << 44) |
         (static_cast<uint64_t>(ui) << 22) | static_cast<uint64_t>(vi);
}

size_t count_exact(int m, int len) {
  return freed::word_count(m, len) -
         (len == 0 ? 0 : freed::word_count(m, len - 1));
}

mpz_class pair_count(int m, int bound) {
  if (bound < 0) return 0;
  mpz_class total = 0;
  for (int s = 0; s <= bound; ++s) {
    for (int a = 0; a <= s; ++a) {
      total += mpz_class(count_exact(m, a)) * mpz_class(count_exact(m, s - a));
    }
  }
  return total;
}

// Every nonzero reduced product u·gens[gi]·v of degree <= maxdeg, with
// |u|+|v| <= bounds[gi], streamed by |u|+|v| ascending, then generator,
// then |u|, then word ranks.  Stops when fn returns false.
template <typename F>
void stream_rows(int m, const std::vector<Word>& words,
                 const std::vector<FreeDElement>& gens,
                 const std::vector<int>& bounds, int maxdeg, F&& fn) {
  int maxbound = 0;
  for (int b : bounds) maxbound = std::max(maxbound, b);
  for (int s = 0; s <= maxbound; ++s) {
    for (uint32_t gi = 0; gi < gens.size(); ++gi) {
      if (s > bounds[gi]) continue;
      for (int a = 0; a <= s; ++a) {
        const int b = s - a;
        const size_t u0 = a == 0 ? 0 : freed::word_count(m, a - 1);
        const size_t u1 = freed::word_count(m, a);
        const size_t v0 = b == 0 ? 0 : freed::word_count(m, b - 1);
        const size_t v1 = freed::word_count(m, b);
        for (size_t ui = u0; ui < u1; ++ui) {
          for (size_t vi = v0; vi < v1; ++vi) {
            FreeDElement prod = product(words[ui], gens[gi], words[vi]);
            if (freed::fd_is_zero(prod)) continue;
            if (freed::fd_degree(prod) > maxdeg) continue;
            if (!fn(gi, ui, vi, prod)) return;
          }
        }
      }
    }
  }
}

// ---- greedy integer reduction by leading words ----

struct GreedyState {
  FreeDElement residual;
  std::vector<Triple> used;
};

struct Candidate {
  Word u, v;
  uint32_t gen;
  FreeDElement prod;
  mpz_class leadc;
};

std::vector<Candidate> lead_candidates(const Word& lead,
                                       const std::vector<FreeDElement>& gens,
                                       int maxdeg) {
  std::vector<Candidate> out;
  for (uint32_t gi = 0; gi < gens.size(); ++gi) {
    const Word& lam = gens[gi].rbegin()->first;
    if (lam.size() > lead.size()) continue;
    for (size_t pos = 0; pos + lam.size() <= lead.size(); ++pos) {
      if (!std::equal(lam.begin(), lam.end(), lead.begin() + pos)) continue;
      Word u(lead.begin(), lead.begin() + pos);
      Word v(lead.begin() + pos + lam.size(), lead.end());
      FreeDElement prod = product(u, gens[gi], v);
      if (freed::fd_is_zero(prod)) continue;
      if (freed::fd_degree(prod) > maxdeg) continue;
      if (prod.rbegin()->first != lead) continue;
      mpz_class lc = prod.rbegin()->second;
      out.push_back(
          {std::move(u), std::move(v), gi, std::move(prod), std::move(lc)});
    }
  }
  return out;
}

void greedy_reduce(const std::vector<FreeDElement>& gens, int maxdeg,
                   GreedyState& st) {
  while (!st.residual.empty()) {
    const Word lead = st.residual.rbegin()->first;
    const mpz_class cl = st.residual.rbegin()->second;
    const std::vector<Candidate> cands = lead_candidates(lead, gens, maxdeg);
    if (cands.empty()) return;
    // extended-gcd combination of the candidates' leading coefficients
    mpz_class g = 0;
    std::vector<mpz_class> combo(cands.size(), mpz_class(0));
    for (size_t i = 0; i < cands.size() && g != 1; ++i) {
      mpz_class gn, s, t;
      mpz_gcdext(gn.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                 cands[i].leadc.get_mpz_t());
      for (size_t j = 0; j < i; ++j) combo[j] *= s;
      combo[i] = t;
      g = gn;
    }
    if (g == 0 || cl % g != 0) return;  // stuck on this leading word
    const mpz_class q = cl / g;
    for (size_t i = 0; i < cands.size(); ++i) {
      if (combo[i] == 0) continue;
      const mpz_class coeff = q * combo[i];
      st.residual =
          freed::fd_sub(st.residual, freed::fd_scale(cands[i].prod, coeff));
      st.used.push_back({cands[i].u, cands[i].gen, cands[i].v, coeff});
    }
    // the combination clears the leading word and introduces nothing above
  }
}

// ---- witness search: a functional on low-degree words killing all rows ----

std::optional<Witness> find_witness(int m, const FreeDElement& residual,
                                    const std::vector<FreeDElement>& gens,
                                    const std::vector<int>& mindeg,
                                    int maxdeg) {
  const int rdeg = freed::fd_degree(residual);
  for (int dy = rdeg; dy <= maxdeg; ++dy) {
    mpz_class est = 0;
    std::vector<int> bounds(gens.size());
    int maxbound = 0;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      bounds[gi] = dy - mindeg[gi] + 2;
      maxbound = std::max(maxbound, bounds[gi]);
      est += pair_count(m, bounds[gi]);
    }
    if (est > mpz_class(kWitnessPairBudget)) return std::nullopt;
    const std::vector<Word> words = freed::word_basis(m, std::max(maxbound, 0));
    const size_t ycols = freed::word_count(m, dy);

    intlin::EchelonQ ech;
    stream_rows(m, words, gens, bounds, maxdeg,
                [&](uint32_t, size_t, size_t, const FreeDElement& prod) {
                  intlin::SpRowQ r;
                  for (const auto& [w, c] : prod) {
                    if (static_cast<int>(w.size()) > dy) break;
                    r.nz.emplace_back(
                        static_cast<uint32_t>(freed::rank_word(m, w)),
                        mpq_class(c));
                  }
                  if (!r.nz.empty()) ech.add_row(std::move(r));
                  return ech.rank() < ycols;
                });
    if (ech.rank() == ycols) continue;

    std::vector<mpq_class> x(ycols, mpq_class(0));
    for (const auto& [w, c] : residual) {
      x[freed::rank_word(m, w)] = mpq_class(c);
    }
    const std::vector<Word> ybasis = freed::word_basis(m, dy);
    for (const auto& y : ech.kernel(static_cast<uint32_t>(ycols))) {
      mpq_class pairing(0);
      for (size_t j = 0; j < ycols; ++j) pairing += x[j] * y[j];
      pairing.canonicalize();
      if (pairing == 0) continue;

      mpz_class den(1);
      for (const auto& q : y) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
      }
      Witness wit;
      FreeDElement ymap;  // reused as a word-indexed integer functional
      for (size_t j = 0; j < ycols; ++j) {
        if (y[j] == 0) continue;
        mpq_class scaled = y[j] * mpq_class(den);
        scaled.canonicalize();
        wit.coords.emplace_back(ybasis[j], scaled.get_num());
        ymap[ybasis[j]] = scaled.get_num();
      }
      mpq_class scaled_pairing = pairing * mpq_class(den);
      scaled_pairing.canonicalize();
      wit.pairing = scaled_pairing.get_num();

      // independent replay: the integer functional must vanish on every
      // row of the truncated system and pair nonzero with the residual
      bool ok = true;
      stream_rows(m, words, gens, bounds, maxdeg,
                  [&](uint32_t, size_t, size_t, const FreeDElement& prod) {
                    mpz_class acc(0);
                    for (const auto& [w, c] : prod) {
                      const auto it = ymap.find(w);
                      if (it != ymap.end()) acc += c * it->second;
                    }
                    ok = acc == 0;
                    return ok;
                  });
      mpz_class acc(0);
      for (const auto& [w, c] : residual) {
        const auto it = ymap.find(w);
        if (it != ymap.end()) acc += c * it->second;
      }
      if (!ok || acc == 0 || acc != wit.pairing) {
        throw std::logic_error("witness replay failed");
      }
      return wit;
    }
  }
  return std::nullopt;
}

// ---- traced echelon over GF(p) with certificate unwinding ----

class TraceEchelon {
 public:
  // remainder = r - sum over trace of coeff * pivot(seq)
  intlin::SpRowP reduce(const intlin::SpRowP& r,
                        std::vector<std::pair<uint32_t, int64_t>>* trace) const {
    std::map<uint32_t, int64_t> w(r.nz.begin(), r.nz.end());
    intlin::SpRowP out;
    while (!w.empty()) {
      const auto lead = std::prev(w.end());
      const auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        out.nz.emplace_back(lead->first, lead->second);
        w.erase(lead);
        continue;
      }
      const int64_t c = lead->second;
      if (trace != nullptr) trace->emplace_back(it->second.seq, c);
      axpy(w, kP - c, it->second.row);
    }
    std::reverse(out.nz.begin(), out.nz.end());
    return out;
  }

  bool add_row(const intlin::SpRowP& r, uint64_t id) {
    std::vector<std::pair<uint32_t, int64_t>> tr;
    intlin::SpRowP rem = reduce(r, &tr);
    if (rem.nz.empty()) return false;
    const int64_t lam = intlin::inv_mod(rem.nz.back().second, kP);
    for (auto& [c, v] : rem.nz) v = mulmod(v, lam);
    for (auto& [seq, c] : tr) c = mulmod(c, lam);
    const uint32_t col = rem.nz.back().first;
    const uint32_t seq = static_cast<uint32_t>(origin_.size());
    origin_.push_back(id);
    lambda_.push_back(lam);
    beta_.push_back(std::move(tr));
    pivots_.emplace(col, PivotRow{std::move(rem), seq});
    return true;
  }

  // Given residual = sum of trace coefficients times pivots, accumulate
  // the combination back onto original row ids (all mod p).
  std::map<uint64_t, int64_t> unwind(
      const std::vector<std::pair<uint32_t, int64_t>>& trace) const {
    std::vector<int64_t> gamma(origin_.size(), 0);
    for (const auto& [seq, c] : trace) gamma[seq] = (gamma[seq] + c) % kP;
    std::map<uint64_t, int64_t> rowc;
    for (size_t k = origin_.size(); k-- > 0;) {
      const int64_t c = gamma[k] % kP;
      if (c == 0) continue;
      int64_t& slot = rowc[origin_[k]];
      slot = (slot + mulmod(c, lambda_[k])) % kP;
      if (slot == 0) rowc.erase(origin_[k]);
      for (const auto& [jseq, b] : beta_[k]) {
        gamma[jseq] = ((gamma[jseq] - mulmod(c, b)) % kP + kP) % kP;
      }
    }
    return rowc;
  }

  size_t rank() const { return origin_.size(); }

 private:
  static constexpr int64_t kP = intlin::kPrime;
  struct PivotRow {
    intlin::SpRowP row;
    uint32_t seq;
  };
  static int64_t mulmod(int64_t a, int64_t b) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % kP);
  }
  static void axpy(std::map<uint32_t, int64_t>& w, int64_t c,
                   const intlin::SpRowP& row) {
    for (const auto& [col, v] : row.nz) {
      const int64_t nv = (w[col] + mulmod(c, v)) % kP;
      if (nv == 0) {
        w.erase(col);
      } else {
        w[col] = nv;
      }
    }
  }

  std::map<uint32_t, PivotRow> pivots_;
  std::vector<uint64_t> origin_;
  std::vector<int64_t> lambda_;
  std::vector<std::vector<std::pair<uint32_t, int64_t>>> beta_;
};

intlin::SpRowP to_row_p(const FreeDElement& x, int m) {
  intlin::SpRowP r;
  for (const auto& [w, c] : x) {
    mpz_class rem = c % intlin::kPrime;
    if (rem < 0) rem += intlin::kPrime;
    if (rem == 0 && c != 0) {
      throw std::runtime_error("coefficient divisible by the working prime");
    }
    if (rem != 0) {
      const size_t rank = freed::rank_word(m, w);
      if (rank >= kRankCap) throw std::runtime_error("word rank overflow");
      r.nz.emplace_back(static_cast<uint32_t>(rank), rem.get_si());
    }
  }
  std::sort(r.nz.begin(), r.nz.end());
  return r;
}

std::vector<Triple> merge_triples(std::vector<Triple> triples) {
  std::map<std::tuple<Word, uint32_t, Word>, mpz_class> acc;
  for (auto& t : triples) {
    acc[{t.u, t.gen, t.v}] += t.c;
  }
  std::vector<Triple> out;
  for (auto& [key, c] : acc) {
    if (c == 0) continue;
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  }
  return out;
}

}  // namespace

FreeDElement replay(const IdealCertificate& cert,
                    const std::vector<FreeDElement>& gens) {
  FreeDElement acc = freed::fd_zero();
  for (const auto& t : cert.triples) {
    if (t.gen >= gens.size()) throw std::invalid_argument("generator index");
    acc = freed::fd_add(
        acc, freed::fd_scale(product(t.u, gens[t.gen], t.v), t.c));
  }
  return acc;
}

int default_maxdeg(const FreeDElement& target, int m) {
  return std::max(freed::fd_degree(target), m);
}

MemberResult ideal_member(int m, const FreeDElement& target,
                          const std::vector<FreeDElement>& gens, int maxdeg) {
  if (m < 2 || m > 6) throw std::invalid_argument("m must be between 2 and 6");
  if (freed::fd_degree(target) > maxdeg) {
    throw std::invalid_argument("target degree exceeds maxdeg");
  }
  for (const auto& g : gens) {
    if (freed::fd_is_zero(g)) throw std::invalid_argument("zero generator");
  }

  MemberResult res;
  res.maxdeg = maxdeg;

  GreedyState st{target, {}};
  greedy_reduce(gens, maxdeg, st);

  auto finish_found = [&](std::vector<Triple> triples) {
    res.verdict = Verdict::kFound;
    res.cert.triples = merge_triples(std::move(triples));
    res.cert.maxdeg = maxdeg;
    if (!(replay(res.cert, gens) == target)) {
      throw std::logic_error("certificate replay failed");
    }
    return res;
  };

  if (st.residual.empty()) return finish_found(std::move(st.used));

  std::vector<int> mindeg(gens.size());
  std::vector<int> bounds(gens.size());
  mpz_class est = 0;
  int maxbound = 0;
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    mindeg[gi] = min_term_degree(gens[gi]);
    bounds[gi] = maxdeg - mindeg[gi] + 2;
    maxbound = std::max(maxbound, bounds[gi]);
    est += pair_count(m, bounds[gi]);
  }

  if (est > mpz_class(kRowBudget)) {
    auto wit = find_witness(m, st.residual, gens, mindeg, maxdeg);
    if (wit.has_value()) {
      res.verdict = Verdict::kNotFound;
      res.witness = std::move(wit);
      return res;
    }
    throw std::runtime_error(
        "truncated span too large to echelonize and no witness found");
  }

  // decisive path: traced echelon over GF(p), exact integer extraction
  const std::vector<Word> words = freed::word_basis(m, std::max(maxbound, 0));
  if (words.size() >= kRankCap) throw std::runtime_error("word rank overflow");
  const intlin::SpRowP residual_p = to_row_p(st.residual, m);

  TraceEchelon ech;
  uint64_t streamed = 0;
  bool spanned = false;
  stream_rows(m, words, gens, bounds, maxdeg,
              [&](uint32_t gi, size_t ui, size_t vi, const FreeDElement& prod) {
                ech.add_row(to_row_p(prod, m), pack_id(gi, ui, vi));
                if (++streamed % 32768 == 0) {
                  spanned = ech.reduce(residual_p, nullptr).nz.empty();
                }
                return !spanned;
              });

  std::vector<std::pair<uint32_t, int64_t>> trace;
  const intlin::SpRowP rem = ech.reduce(residual_p, &trace);
  if (!rem.nz.empty()) {
    res.verdict = Verdict::kNotFound;
    return res;
  }

  // support discovery, then the exact integer solve on that support
  const std::map<uint64_t, int64_t> support = ech.unwind(trace);
  std::vector<Triple> picked;
  std::vector<FreeDElement> prods;
  for (const auto& [id, coeff] : support) {
    const uint32_t gi = static_cast<uint32_t>(id >> 44);
    const size_t ui = static_cast<size_t>((id >> 22) & (kRankCap - 1));
    const size_t vi = static_cast<size_t>(id & (kRankCap - 1));
    picked.push_back({words[ui], gi, words[vi], mpz_class(0)});
    prods.push_back(product(words[ui], gens[gi], words[vi]));
  }
  std::set<Word, freed::WordLess> support_words;
  for (const auto& p : prods) {
    for (const auto& [w, c] : p) support_words.insert(w);
  }
  for (const auto& [w, c] : st.residual) support_words.insert(w);
  std::vector<std::vector<mpz_class>> A;
  std::vector<mpz_class> b;
  for (const auto& w : support_words) {
    std::vector<mpz_class> row(prods.size(), mpz_class(0));
    for (size_t j = 0; j < prods.size(); ++j) {
      const auto it = prods[j].find(w);
      if (it != prods[j].end()) row[j] = it->second;
    }
    A.push_back(std::move(row));
    const auto it = st.residual.find(w);
    b.push_back(it != st.residual.end() ? it->second : mpz_class(0));
  }
  const auto solution = intlin::solve_z_dense(A, b);
  if (!solution.has_value()) {
    throw std::runtime_error("integer certificate extraction failed");
  }
  std::vector<Triple> triples = std::move(st.used);
  for (size_t j = 0; j < picked.size(); ++j) {
    if ((*solution)[j] == 0) continue;
    picked[j].c = (*solution)[j];
    triples.push_back(picked[j]);
  }
  return finish_found(std::move(triples));
}

std::vector<FreeDElement> conj133_family(int m) {
  if (m < 2 || m > 6) throw std::invalid_argument("m must be between 2 and 6");
  std::vector<FreeDElement> out;
  std::set<FreeDElement> seen;
  auto push = [&](FreeDElement x) {
    if (freed::fd_is_zero(x)) return;
    if (seen.insert(x).second) out.push_back(std::move(x));
  };
  auto one_minus = [](int k) {
    return freed::fd_sub(freed::fd_one(), freed::fd_gen(k));
  };

  // the m-fold braid difference in the two simple generators
  Word b1, b2;
  for (int i = 0; i < m; ++i) {
    b1.push_back(static_cast<uint8_t>(i % 2 == 0 ? 1 : m));
    b2.push_back(static_cast<uint8_t>(i % 2 == 0 ? m : 1));
  }
  push(freed::fd_sub(freed::fd_word(b1), freed::fd_word(b2)));

  for (int n = 1; n <= m; ++n) {
    if (m % n != 0) continue;
    const int L = m / n;
    for (int r = 1; r <= n; ++r) {
      auto letter = [&](int a) { return r + a * n; };
      // quadratic-linear relations, 1 <= p < L/2
      for (int p = 1; 2 * p < L; ++p) {
        FreeDElement lhs = freed::fd_zero();
        FreeDElement rhs = freed::fd_zero();
        for (int a = 0; a < L; ++a) {
          for (int b = a + 1; b < L; ++b) {
            if (b - a == L - p) {
              lhs = freed::fd_add(
                  lhs, freed::fd_word({static_cast<uint8_t>(letter(a)),
                                       static_cast<uint8_t>(letter(b))}));
            }
            if (b - a == p) {
              rhs = freed::fd_add(
                  rhs, freed::fd_word({static_cast<uint8_t>(letter(b)),
                                       static_cast<uint8_t>(letter(a))}));
            }
          }
        }
        for (int c = p; c < L - p; ++c) {
          rhs = freed::fd_sub(rhs,
                              freed::fd_word({static_cast<uint8_t>(letter(c))}));
        }
        push(freed::fd_sub(lhs, rhs));
      }
      // Yang-Baxter relations, 0 <= t <= L
      for (int t = 0; t <= L; ++t) {
        FreeDElement lhs = freed::fd_one();
        FreeDElement rhs = freed::fd_one();
        for (int a = t; a <= L - 1; ++a) {
          lhs = freed::fd_mul(lhs, one_minus(letter(a)));
        }
        for (int b = 0; b <= t - 1; ++b) {
          lhs = freed::fd_mul(lhs, freed::fd_gen(letter(b)));
        }
        for (int b = t - 1; b >= 0; --b) {
          rhs = freed::fd_mul(rhs, freed::fd_gen(letter(b)));
        }
        for (int a = L - 1; a >= t; --a) {
          rhs = freed::fd_mul(rhs, one_minus(letter(a)));
        }
        push(freed::fd_sub(lhs, rhs));
      }
    }
  }
  return out;
}

}  // namespace hf::ideal
