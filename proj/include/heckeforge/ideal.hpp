// Truncated two-sided ideal membership over the free-word model, with
// replayable integer certificates, non-membership witnesses, and the
// conjectured relation family for the dihedral presentations.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "heckeforge/freed.hpp"

namespace hf::ideal {

struct Triple {
  freed::Word u;
  uint32_t gen = 0;  // index into the generator list
  freed::Word v;
  mpz_class c;
};

struct IdealCertificate {
  std::vector<Triple> triples;
  int maxdeg = 0;
};

// Integer linear functional vanishing on every reduced product u·g·v of
// degree <= the truncation, with a nonzero pairing against the target:
// proof of non-membership at every truncation degree, not just the one
// requested.  Stored sparsely over words.
struct Witness {
  std::vector<std::pair<freed::Word, mpz_class>> coords;
  mpz_class pairing;  // <witness, target>, nonzero
};

enum class Verdict { kFound, kNotFound };

struct MemberResult {
  Verdict verdict = Verdict::kNotFound;
  IdealCertificate cert;           // populated when kFound
  std::optional<Witness> witness;  // populated on witnessed kNotFound
  int maxdeg = 0;
};

// Decides whether target is an integer combination of reduced products
// u·g·v whose degree stays <= maxdeg.  kFound certificates replay
// exactly; kNotFound is conclusive for such combinations within the
// truncation, and at any degree when a witness is attached.
MemberResult ideal_member(int m, const freed::FreeDElement& target,
                          const std::vector<freed::FreeDElement>& gens,
                          int maxdeg);

// Sum of c·u·gens[gen]·v in free-word arithmetic.
freed::FreeDElement replay(const IdealCertificate& cert,
                           const std::vector<freed::FreeDElement>& gens);

int default_maxdeg(const freed::FreeDElement& target, int m);

// LHS - RHS of every relation in the conjectured presentation family:
// the m-fold braid difference, the quadratic-linear relations (n | m,
// 1 <= r <= n, 1 <= p < m/2n), and the Yang-Baxter relations
// (0 <= t <= m/n), deduplicated, zero elements dropped, fixed order.
std::vector<freed::FreeDElement> conj133_family(int m);

}  // namespace hf::ideal
