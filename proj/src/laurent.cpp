#include "heckeforge/laurent.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hf::exact {

ExpVec ev_add(ExpVec a, ExpVec b) {
  for (int i = 0; i < kMaxVars; ++i) a.e[i] += b.e[i];
  return a;
}

ExpVec ev_neg(ExpVec a) {
  for (int i = 0; i < kMaxVars; ++i) a.e[i] = -a.e[i];
  return a;
}

bool ev_is_zero(ExpVec a) { return a == ExpVec{}; }

Mat::Mat() {
  for (int i = 0; i < kMaxVars; ++i) a[i][i] = 1;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  Mat z;
  for (int i = 0; i < kMaxVars; ++i)
    for (int j = 0; j < kMaxVars; ++j) {
      int32_t s = 0;
      for (int k = 0; k < kMaxVars; ++k) s += x.a[i][k] * y.a[k][j];
      z.a[i][j] = s;
    }
  return z;
}

ExpVec mat_apply(const Mat& x, ExpVec v) {
  ExpVec w;
  for (int i = 0; i < kMaxVars; ++i) {
    int32_t s = 0;
    for (int k = 0; k < kMaxVars; ++k) s += x.a[i][k] * v.e[k];
    w.e[i] = s;
  }
  return w;
}

bool operator==(const Mat& x, const Mat& y) { return x.a == y.a; }

LaurentPoly lp_zero() { return {}; }

LaurentPoly lp_int(const mpz_class& c) {
  LaurentPoly f;
  if (c != 0) f[ExpVec{}] = c;
  return f;
}

LaurentPoly lp_monomial(ExpVec v, const mpz_class& c) {
  LaurentPoly f;
  if (c != 0) f[v] = c;
  return f;
}

bool lp_is_zero(const LaurentPoly& f) { return f.empty(); }

void lp_add_term(LaurentPoly& f, ExpVec v, const mpz_class& c) {
  if (c == 0) return;
  auto it = f.find(v);
  if (it == f.end()) {
    f.emplace(v, c);
  } else {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly h = f;
  for (const auto& [v, c] : g) lp_add_term(h, v, c);
  return h;
}

LaurentPoly lp_sub(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly h = f;
  for (const auto& [v, c] : g) lp_add_term(h, v, -c);
  return h;
}

LaurentPoly lp_neg(const LaurentPoly& f) {
  LaurentPoly h;
  for (const auto& [v, c] : f) h.emplace(v, -c);
  return h;
}

LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly h;
  for (const auto& [v, c] : f)
    for (const auto& [w, d] : g) lp_add_term(h, ev_add(v, w), c * d);
  return h;
}

LaurentPoly lp_scale(const LaurentPoly& f, const mpz_class& c) {
  LaurentPoly h;
  if (c == 0) return h;
  for (const auto& [v, d] : f) h.emplace(v, c * d);
  return h;
}

LaurentPoly lp_apply(const Mat& x, const LaurentPoly& f) {
  LaurentPoly h;
  for (const auto& [v, c] : f) lp_add_term(h, mat_apply(x, v), c);
  return h;
}

namespace {

// Floored division, so the residue key is stable along the whole class.
int32_t floordiv(int32_t a, int32_t b) {
  int32_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

std::optional<LaurentPoly> lp_divide_one_minus(const LaurentPoly& f, ExpVec v) {
  if (ev_is_zero(v)) throw std::invalid_argument("lp_divide_one_minus: v = 0");
  int pivot = 0;
  while (v.e[pivot] == 0) ++pivot;

  // Class key: e shifted by a multiple of v so the pivot entry lies in
  // [0, |v_pivot|).  Within a class, position k recovers the term.
  std::map<ExpVec, std::map<int32_t, mpz_class>> classes;
  for (const auto& [e, c] : f) {
    int32_t k = floordiv(e.e[pivot], v.e[pivot]);
    ExpVec key = e;
    for (int i = 0; i < kMaxVars; ++i) key.e[i] -= k * v.e[i];
    classes[key][k] = c;
  }

  // (q - t^v q) = f per class means q_k - q_{k-1} = c_k, so q_k is the
  // running sum; it vanishes eventually iff the class sums to zero.
  LaurentPoly q;
  for (const auto& [key, terms] : classes) {
    mpz_class run = 0;
    auto it = terms.begin();
    for (int32_t k = it->first;; ++k) {
      if (it != terms.end() && k == it->first) {
        run += it->second;
        ++it;
      }
      if (run == 0) {
        if (it == terms.end()) break;
        continue;
      }
      if (it == terms.end()) return std::nullopt;
      ExpVec pos = key;
      for (int i = 0; i < kMaxVars; ++i) pos.e[i] += k * v.e[i];
      q.emplace(pos, run);
    }
  }
  return q;
}

int64_t lp_eval_mod(const LaurentPoly& f, const std::array<int64_t, kMaxVars>& pt,
                    int64_t p) {
  auto powmod = [p](int64_t b, int64_t n) {
    b %= p;
    if (b < 0) b += p;
    if (n < 0) {
      // Fermat inverse; p is prime in every caller.
      int64_t inv = 1, x = b, k = p - 2;
      while (k) {
        if (k & 1) inv = __int128(inv) * x % p;
        x = __int128(x) * x % p;
        k >>= 1;
      }
      b = inv;
      n = -n;
    }
    int64_t r = 1;
    while (n) {
      if (n & 1) r = __int128(r) * b % p;
      b = __int128(b) * b % p;
      n >>= 1;
    }
    return r;
  };
  int64_t acc = 0;
  for (const auto& [v, c] : f) {
    int64_t term = mpz_class(c % p).get_si();
    if (term < 0) term += p;
    for (int i = 0; i < kMaxVars; ++i)
      if (v.e[i] != 0) term = __int128(term) * powmod(pt[i], v.e[i]) % p;
    acc = (acc + term) % p;
  }
  return acc;
}

std::string lp_render(const LaurentPoly& f, const std::vector<std::string>& names) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [v, c] : f) {
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string vars;
    for (size_t i = 0; i < names.size(); ++i) {
      if (v.e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[i];
      if (v.e[i] != 1) vars += "^" + std::to_string(v.e[i]);
    }
    if (vars.empty()) {
      out += mag.get_str();
    } else {
      out += mag.get_str() + "*" + vars;
    }
  }
  return out;
}

}  // namespace hf::exact
