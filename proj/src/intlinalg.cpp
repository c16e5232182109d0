#include "heckeforge/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hf::intlin {

int64_t inv_mod(int64_t a, int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("inverse of zero");
  int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const int64_t q = r0 / r1;
    const int64_t r2 = r0 - q * r1;
    const int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw std::invalid_argument("not invertible");
  return t0 < 0 ? t0 + p : t0;
}

namespace {

// work representation during reduction: column -> value mod p
using WorkP = std::map<uint32_t, int64_t>;

void work_axpy(WorkP& w, int64_t c, const SpRowP& row, int64_t p) {
  for (const auto& [col, v] : row.nz) {
    const int64_t nv = (w[col] + static_cast<int64_t>(
                            static_cast<__int128>(c) * v % p)) %
                       p;
    if (nv == 0) {
      w.erase(col);
    } else {
      w[col] = nv;
    }
  }
}

}  // namespace

SpRowP EchelonP::reduce(const SpRowP& r) const {
  WorkP w(r.nz.begin(), r.nz.end());
  SpRowP out;
  while (!w.empty()) {
    const auto lead = std::prev(w.end());
    const uint32_t col = lead->first;
    const auto it = pivots_.find(col);
    if (it == pivots_.end()) {
      out.nz.emplace_back(col, lead->second);
      w.erase(lead);
      continue;
    }
    work_axpy(w, p_ - lead->second, it->second, p_);
  }
  std::reverse(out.nz.begin(), out.nz.end());
  return out;
}

bool EchelonP::add_row(const SpRowP& r) {
  SpRowP rem = reduce(r);
  if (rem.nz.empty()) return false;
  const uint32_t col = rem.nz.back().first;
  const int64_t scale = inv_mod(rem.nz.back().second, p_);
  for (auto& [c, v] : rem.nz) {
    v = static_cast<int64_t>(static_cast<__int128>(v) * scale % p_);
  }
  pivots_.emplace(col, std::move(rem));
  return true;
}

namespace {

using WorkQ = std::map<uint32_t, mpq_class>;

void work_axpy(WorkQ& w, const mpq_class& c, const SpRowQ& row) {
  for (const auto& [col, v] : row.nz) {
    mpq_class nv = w[col] + c * v;
    nv.canonicalize();
    if (nv == 0) {
      w.erase(col);
    } else {
      w[col] = nv;
    }
  }
}

}  // namespace

SpRowQ EchelonQ::reduce(SpRowQ r) const {
  WorkQ w(r.nz.begin(), r.nz.end());
  SpRowQ out;
  while (!w.empty()) {
    const auto lead = w.begin();
    const uint32_t col = lead->first;
    const auto it = pivots_.find(col);
    if (it == pivots_.end()) {
      out.nz.emplace_back(col, lead->second);
      w.erase(lead);
      continue;
    }
    work_axpy(w, -lead->second, it->second);
  }
  return out;
}

void EchelonQ::add_row(SpRowQ r) {
  SpRowQ rem = reduce(std::move(r));
  if (rem.nz.empty()) return;
  const uint32_t col = rem.nz.front().first;
  const mpq_class scale = 1 / rem.nz.front().second;
  for (auto& [c, v] : rem.nz) {
    v *= scale;
    v.canonicalize();
  }
  // keep the form fully reduced: clear the new pivot column from every
  // stored row
  for (auto& [pcol, prow] : pivots_) {
    auto hit = std::lower_bound(
        prow.nz.begin(), prow.nz.end(), col,
        [](const auto& e, uint32_t c) { return e.first < c; });
    if (hit == prow.nz.end() || hit->first != col) continue;
    const mpq_class factor = hit->second;
    WorkQ w(prow.nz.begin(), prow.nz.end());
    work_axpy(w, -factor, rem);
    prow.nz.assign(w.begin(), w.end());
  }
  pivots_.emplace(col, std::move(rem));
}

std::vector<std::vector<mpq_class>> EchelonQ::kernel(uint32_t ncols) const {
  std::vector<std::vector<mpq_class>> basis;
  for (uint32_t f = 0; f < ncols; ++f) {
    if (pivots_.count(f) != 0) continue;
    std::vector<mpq_class> v(ncols, mpq_class(0));
    v[f] = 1;
    for (const auto& [pcol, prow] : pivots_) {
      auto hit = std::lower_bound(
          prow.nz.begin(), prow.nz.end(), f,
          [](const auto& e, uint32_t c) { return e.first < c; });
      if (hit != prow.nz.end() && hit->first == f) v[pcol] = -hit->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Column Hermite-style reduction: returns the unimodular transform U such
// that the processed rows of A*U have at most one "pivot" nonzero among
// the still-active columns; active columns at the end span ker A.
struct ColReduction {
  std::vector<std::vector<mpz_class>> u_cols;  // U by columns
  std::vector<size_t> active;                  // kernel columns of A*U
};

ColReduction column_reduce(std::vector<std::vector<mpz_class>> A) {
  const size_t nrows = A.size();
  const size_t ncols = nrows == 0 ? 0 : A[0].size();
  // cols[j] = j-th column of A
  std::vector<std::vector<mpz_class>> cols(
      ncols, std::vector<mpz_class>(nrows, mpz_class(0)));
  for (size_t i = 0; i < nrows; ++i) {
    if (A[i].size() != ncols) throw std::invalid_argument("ragged matrix");
    for (size_t j = 0; j < ncols; ++j) cols[j][i] = A[i][j];
  }
  ColReduction res;
  res.u_cols.assign(ncols, std::vector<mpz_class>(ncols, mpz_class(0)));
  for (size_t j = 0; j < ncols; ++j) res.u_cols[j][j] = 1;
  std::vector<size_t> active(ncols);
  for (size_t j = 0; j < ncols; ++j) active[j] = j;

  for (size_t i = 0; i < nrows; ++i) {
    // repeatedly combine the two active columns with smallest nonzero
    // |entry| in row i until at most one remains
    for (;;) {
      size_t jmin = SIZE_MAX, jsec = SIZE_MAX;
      for (size_t j : active) {
        if (cols[j][i] == 0) continue;
        if (jmin == SIZE_MAX ||
            cmp(abs(cols[j][i]), abs(cols[jmin][i])) < 0) {
          jsec = jmin;
          jmin = j;
        } else if (jsec == SIZE_MAX ||
                   cmp(abs(cols[j][i]), abs(cols[jsec][i])) < 0) {
          jsec = j;
        }
      }
      if (jsec == SIZE_MAX) {
        if (jmin != SIZE_MAX) {
          // row i pinned to column jmin; retire it from the kernel search
          active.erase(std::find(active.begin(), active.end(), jmin));
        }
        break;
      }
      const mpz_class q = cols[jsec][i] / cols[jmin][i];  // truncated
      for (size_t r = 0; r < nrows; ++r) cols[jsec][r] -= q * cols[jmin][r];
      for (size_t r = 0; r < ncols; ++r) {
        res.u_cols[jsec][r] -= q * res.u_cols[jmin][r];
      }
    }
  }
  res.active = std::move(active);
  return res;
}

}  // namespace

std::vector<std::vector<mpz_class>> kernel_z_dense(
    std::vector<std::vector<mpz_class>> A) {
  ColReduction red = column_reduce(std::move(A));
  std::vector<std::vector<mpz_class>> basis;
  basis.reserve(red.active.size());
  for (size_t j : red.active) basis.push_back(std::move(red.u_cols[j]));
  return basis;
}

std::optional<std::vector<mpz_class>> solve_z_dense(
    const std::vector<std::vector<mpz_class>>& A,
    const std::vector<mpz_class>& b) {
  const size_t nrows = A.size();
  if (b.size() != nrows) throw std::invalid_argument("size mismatch");
  const size_t ncols = nrows == 0 ? 0 : A[0].size();
  // augment with -b; a kernel vector with last coordinate 1 solves A c = b
  std::vector<std::vector<mpz_class>> aug(nrows);
  for (size_t i = 0; i < nrows; ++i) {
    aug[i] = A[i];
    aug[i].push_back(-b[i]);
  }
  std::vector<std::vector<mpz_class>> K = kernel_z_dense(std::move(aug));
  // gcd-combine the last coordinates down to a single vector
  std::vector<mpz_class>* carrier = nullptr;
  for (auto& v : K) {
    if (v[ncols] == 0) continue;
    if (carrier == nullptr) {
      carrier = &v;
      continue;
    }
    // reduce the pair until one last coordinate vanishes
    while (v[ncols] != 0) {
      if (cmp(abs((*carrier)[ncols]), abs(v[ncols])) > 0) std::swap(*carrier, v);
      const mpz_class q = v[ncols] / (*carrier)[ncols];
      for (size_t r = 0; r <= ncols; ++r) v[r] -= q * (*carrier)[r];
    }
  }
  if (carrier == nullptr) return std::nullopt;
  const mpz_class& g = (*carrier)[ncols];
  if (g != 1 && g != -1) return std::nullopt;
  std::vector<mpz_class> c(ncols);
  for (size_t j = 0; j < ncols; ++j) {
    c[j] = g == 1 ? (*carrier)[j] : mpz_class(-(*carrier)[j]);
  }
  return c;
}

}  // namespace hf::intlin
