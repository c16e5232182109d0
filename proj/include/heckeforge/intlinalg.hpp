// Exact linear algebra: sparse echelon forms over GF(p) and Q, and
// dense integer kernels via unimodular column reduction.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hf::intlin {

inline constexpr int64_t kPrime = 2147483629;

int64_t inv_mod(int64_t a, int64_t p);

// Sparse row, sorted by column ascending, values nonzero.
struct SpRowP {
  std::vector<std::pair<uint32_t, int64_t>> nz;
};

// Incremental row echelon over GF(p), pivoting on the LARGEST column of
// each row (columns are deglex word ranks, so reduction never raises the
// degree of the leading word).
class EchelonP {
 public:
  explicit EchelonP(int64_t p = kPrime) : p_(p) {}
  // Fully reduce r against the stored rows; remainder has no reducible
  // column left.
  SpRowP reduce(const SpRowP& r) const;
  // Reduce and, if nonzero, install the remainder; true if rank grew.
  bool add_row(const SpRowP& r);
  size_t rank() const { return pivots_.size(); }
  int64_t prime() const { return p_; }

 private:
  int64_t p_;
  std::map<uint32_t, SpRowP> pivots_;  // pivot column -> row, pivot value 1
};

// Sparse exact rational row, sorted by column ascending.
struct SpRowQ {
  std::vector<std::pair<uint32_t, mpq_class>> nz;
};

// Reduced row echelon form over Q, pivoting on the SMALLEST column.
// Rows are kept fully reduced against each other, so kernel extraction
// reads the coefficients straight out of the pivot rows.
class EchelonQ {
 public:
  void add_row(SpRowQ r);
  size_t rank() const { return pivots_.size(); }
  const std::map<uint32_t, SpRowQ>& rows() const { return pivots_; }
  bool is_pivot(uint32_t col) const { return pivots_.count(col) != 0; }
  // Basis of the rational kernel in ncols variables, one vector per free
  // column, in free-column order; entry [free column] = 1.
  std::vector<std::vector<mpq_class>> kernel(uint32_t ncols) const;

 private:
  std::map<uint32_t, SpRowQ> pivots_;
  SpRowQ reduce(SpRowQ r) const;
};

// Basis of the integer kernel {x : A x = 0} of a dense integer matrix,
// computed by unimodular column reduction; the result is a basis of the
// full (saturated) kernel lattice.
std::vector<std::vector<mpz_class>> kernel_z_dense(
    std::vector<std::vector<mpz_class>> A);

// One integer solution of A c = b, or nullopt if none exists over Z.
std::optional<std::vector<mpz_class>> solve_z_dense(
    const std::vector<std::vector<mpz_class>>& A,
    const std::vector<mpz_class>& b);

}  // namespace hf::intlin
