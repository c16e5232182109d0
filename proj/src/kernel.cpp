#include "heckeforge/kernel.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "heckeforge/intlinalg.hpp"

namespace hf::kernel {

using coxeter::DihedralDatum;
using freed::FreeDElement;
using freed::Word;

namespace {

FreeDElement from_vector(const std::vector<mpz_class>& v,
                         const std::vector<Word>& words) {
  FreeDElement x;
  for (size_t j = 0; j < words.size(); ++j) {
    if (v[j] != 0) x[words[j]] = v[j];
  }
  return x;
}

}  // namespace

KernelBasis kernel_K12(int m, int maxdeg) {
  const DihedralDatum W{m};
  if (maxdeg < 0) throw std::invalid_argument("maxdeg must be nonnegative");
  const std::vector<Word> words = freed::word_basis(m, maxdeg);
  const size_t ncols = words.size();
  const size_t nsub = freed::word_count(m, maxdeg > 0 ? maxdeg - 1 : 0);

  // rows keyed by (0 for the counit, then 1 + (k-1)*nsub + rank(target))
  std::map<uint32_t, std::map<uint32_t, mpz_class>> rows;
  rows[0][0] = 1;  // counit: only the empty word contributes
  for (size_t j = 1; j < ncols; ++j) {
    const FreeDElement src = freed::fd_word(words[j]);
    for (int k = 1; k <= m; ++k) {
      const FreeDElement img = freed::derivation(W, k, src);
      for (const auto& [w, c] : img) {
        const uint32_t row =
            1 + static_cast<uint32_t>((k - 1) * nsub + freed::rank_word(m, w));
        auto& cell = rows[row][static_cast<uint32_t>(j)];
        cell += c;
        if (cell == 0) rows[row].erase(static_cast<uint32_t>(j));
      }
    }
  }

  intlin::EchelonQ ech;
  for (const auto& [id, cells] : rows) {
    intlin::SpRowQ r;
    r.nz.reserve(cells.size());
    for (const auto& [col, c] : cells) r.nz.emplace_back(col, mpq_class(c));
    ech.add_row(std::move(r));
  }

  const std::vector<std::vector<mpq_class>> qbasis =
      ech.kernel(static_cast<uint32_t>(ncols));
  const size_t nfree = qbasis.size();

  // lcm of all denominators; 1 means the rational basis is already the
  // integer lattice (free coordinates are the identity block)
  mpz_class den(1);
  for (const auto& v : qbasis) {
    for (const auto& q : v) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    }
  }

  std::vector<std::vector<mpz_class>> zbasis;
  if (den == 1) {
    zbasis.reserve(nfree);
    for (const auto& v : qbasis) {
      std::vector<mpz_class> z(ncols);
      for (size_t j = 0; j < ncols; ++j) z[j] = v[j].get_num();
      zbasis.push_back(std::move(z));
    }
  } else {
    // integer combinations sum_f y_f * qbasis[f] landing in Z^N form the
    // congruence lattice {y : M y = 0 mod den} over the pivot rows
    std::vector<uint32_t> pivot_cols;
    for (const auto& [col, row] : ech.rows()) pivot_cols.push_back(col);
    std::vector<std::vector<mpz_class>> M;
    M.reserve(pivot_cols.size());
    for (uint32_t p : pivot_cols) {
      std::vector<mpz_class> row(nfree + pivot_cols.size(), mpz_class(0));
      for (size_t f = 0; f < nfree; ++f) {
        mpq_class scaled = mpq_class(den) * qbasis[f][p];
        scaled.canonicalize();
        if (scaled.get_den() != 1) throw std::logic_error("lcm denominator");
        row[f] = scaled.get_num();
      }
      M.push_back(std::move(row));
    }
    for (size_t i = 0; i < pivot_cols.size(); ++i) {
      M[i][nfree + i] = -den;
    }
    const std::vector<std::vector<mpz_class>> lat = intlin::kernel_z_dense(M);
    zbasis.reserve(lat.size());
    for (const auto& y : lat) {
      std::vector<mpz_class> z(ncols, mpz_class(0));
      for (size_t j = 0; j < ncols; ++j) {
        mpq_class acc(0);
        for (size_t f = 0; f < nfree; ++f) acc += mpq_class(y[f]) * qbasis[f][j];
        acc.canonicalize();
        if (acc.get_den() != 1) throw std::logic_error("saturation failed");
        z[j] = acc.get_num();
      }
      zbasis.push_back(std::move(z));
    }
  }

  // sign-normalize on the leading (smallest-rank) nonzero coordinate and
  // sort the vectors for a reproducible basis
  for (auto& z : zbasis) {
    for (const auto& c : z) {
      if (c == 0) continue;
      if (c < 0) {
        for (auto& e : z) e = -e;
      }
      break;
    }
  }
  std::sort(zbasis.begin(), zbasis.end(),
            [](const std::vector<mpz_class>& a,
               const std::vector<mpz_class>& b) {
              for (size_t j = 0; j < a.size(); ++j) {
                const int c = cmp(a[j], b[j]);
                if (c != 0) return c > 0;
              }
              return false;
            });

  KernelBasis out;
  out.m = m;
  out.maxdeg = maxdeg;
  out.basis.reserve(zbasis.size());
  for (const auto& z : zbasis) out.basis.push_back(from_vector(z, words));
  return out;
}

bool in_kernel(const DihedralDatum& W, const FreeDElement& x, int maxdeg) {
  if (freed::fd_degree(x) > maxdeg) return false;
  if (freed::counit(x) != 0) return false;
  for (int k = 1; k <= W.m; ++k) {
    if (!freed::fd_is_zero(freed::derivation(W, k, x))) return false;
  }
  return true;
}

}  // namespace hf::kernel
