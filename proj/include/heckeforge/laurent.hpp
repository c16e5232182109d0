// Multivariate Laurent polynomials over Z with exact GMP coefficients.
#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hf::exact {

// Exponent vector in up to kMaxVars variables; unused slots stay zero.
inline constexpr int kMaxVars = 4;

struct ExpVec {
  std::array<int32_t, kMaxVars> e{0, 0, 0, 0};
  auto operator<=>(const ExpVec&) const = default;
};

inline ExpVec ev(int a, int b = 0, int c = 0, int d = 0) {
  return ExpVec{{a, b, c, d}};
}
ExpVec ev_add(ExpVec a, ExpVec b);
ExpVec ev_neg(ExpVec a);
bool ev_is_zero(ExpVec a);

// Integer matrix acting on exponent vectors, t^e -> t^(M e).
// Defaults to the identity; rank-2 data only fill the upper-left block.
struct Mat {
  std::array<std::array<int32_t, kMaxVars>, kMaxVars> a{};
  Mat();
};
Mat mat_mul(const Mat& x, const Mat& y);
ExpVec mat_apply(const Mat& x, ExpVec v);
bool operator==(const Mat& x, const Mat& y);

// Term map with zero coefficients never stored; the empty map is 0.
using LaurentPoly = std::map<ExpVec, mpz_class>;

LaurentPoly lp_zero();
LaurentPoly lp_int(const mpz_class& c);
LaurentPoly lp_monomial(ExpVec v, const mpz_class& c = 1);
bool lp_is_zero(const LaurentPoly& f);
void lp_add_term(LaurentPoly& f, ExpVec v, const mpz_class& c);
LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_sub(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_neg(const LaurentPoly& f);
LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_scale(const LaurentPoly& f, const mpz_class& c);

// Substitute t^e -> t^(M e) termwise.
LaurentPoly lp_apply(const Mat& x, const LaurentPoly& f);

// Exact quotient f / (1 - t^v) for v != 0, or nullopt if not divisible.
// Terms are grouped by residue class modulo Z v; within a class the
// quotient is the telescoping partial-sum sequence, and the class is
// divisible precisely when its coefficients sum to zero.
std::optional<LaurentPoly> lp_divide_one_minus(const LaurentPoly& f, ExpVec v);

// Evaluation at a point modulo p, for randomized cross-checks.
int64_t lp_eval_mod(const LaurentPoly& f, const std::array<int64_t, kMaxVars>& pt,
                    int64_t p);

// Render with names[i] for variable i, terms in ascending key order, e.g.
// "-1*t1^-1*t2^2 + 3"; "0" for the zero polynomial.
std::string lp_render(const LaurentPoly& f, const std::vector<std::string>& names);

}  // namespace hf::exact
