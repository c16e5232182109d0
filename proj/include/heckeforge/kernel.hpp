// The joint kernel K12: elements of the free-word model with zero counit
// killed by every twisted derivation d_k, truncated by degree.
#pragma once

#include <vector>

#include "heckeforge/coxeter.hpp"
#include "heckeforge/freed.hpp"

namespace hf::kernel {

struct KernelBasis {
  int m = 0;
  int maxdeg = 0;
  // Basis of the full integer solution lattice (saturated: any integer
  // solution is an integer combination).  Vectors are sign-normalized on
  // their leading word and sorted.
  std::vector<freed::FreeDElement> basis;
};

// Solves counit(x) = 0 and d_k(x) = 0 for all k over the word basis of
// degree <= maxdeg.  Constraint rows are ordered counit first, then by
// (k, target word rank); columns follow word_basis order.
KernelBasis kernel_K12(int m, int maxdeg);

// Direct membership test: degree bound, zero counit, all d_k vanish.
bool in_kernel(const coxeter::DihedralDatum& W, const freed::FreeDElement& x,
               int maxdeg);

}  // namespace hf::kernel
