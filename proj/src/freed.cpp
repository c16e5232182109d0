#include "heckeforge/freed.hpp"

#include <cctype>
#include <stdexcept>

namespace hf::freed {

using coxeter::DihedralDatum;
using coxeter::GroupElement;

FreeDElement fd_zero() { return {}; }

FreeDElement fd_one() { return fd_int(1); }

FreeDElement fd_int(const mpz_class& c) {
  FreeDElement a;
  if (c != 0) a.emplace(Word{}, c);
  return a;
}

FreeDElement fd_gen(int k) {
  if (k < 1 || k > 6) throw std::invalid_argument("generator index");
  FreeDElement a;
  a.emplace(Word{uint8_t(k)}, 1);
  return a;
}

FreeDElement fd_word(Word w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) throw std::invalid_argument("adjacent repeat");
  FreeDElement a;
  a.emplace(std::move(w), 1);
  return a;
}

void fd_add_term(FreeDElement& a, const Word& w, const mpz_class& c) {
  if (c == 0) return;
  auto it = a.find(w);
  if (it == a.end()) {
    a.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

FreeDElement fd_add(const FreeDElement& a, const FreeDElement& b) {
  FreeDElement c = a;
  for (const auto& [w, x] : b) fd_add_term(c, w, x);
  return c;
}

FreeDElement fd_sub(const FreeDElement& a, const FreeDElement& b) {
  FreeDElement c = a;
  for (const auto& [w, x] : b) fd_add_term(c, w, -x);
  return c;
}

FreeDElement fd_neg(const FreeDElement& a) {
  FreeDElement c;
  for (const auto& [w, x] : a) c.emplace(w, -x);
  return c;
}

FreeDElement fd_scale(const FreeDElement& a, const mpz_class& c) {
  FreeDElement b;
  if (c == 0) return b;
  for (const auto& [w, x] : a) b.emplace(w, c * x);
  return b;
}

FreeDElement fd_mul(const FreeDElement& a, const FreeDElement& b) {
  FreeDElement c;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      Word w = u;
      // Single collapse: inputs are adjacent-repeat-free, so at most the
      // boundary pair can coincide, and D_k D_k = D_k keeps coefficients.
      size_t from = (!u.empty() && !v.empty() && u.back() == v.front()) ? 1 : 0;
      w.insert(w.end(), v.begin() + from, v.end());
      fd_add_term(c, w, x * y);
    }
  return c;
}

bool fd_is_zero(const FreeDElement& a) { return a.empty(); }

int fd_degree(const FreeDElement& a) {
  return a.empty() ? 0 : int(a.rbegin()->first.size());
}

mpz_class counit(const FreeDElement& a) {
  auto it = a.find(Word{});
  return it == a.end() ? mpz_class(0) : it->second;
}

FreeDElement fd_act(const DihedralDatum& W, GroupElement w,
                    const FreeDElement& a) {
  FreeDElement out;
  for (const auto& [word, c] : a) {
    FreeDElement acc = fd_int(c);
    for (uint8_t k : word) {
      auto [kp, flipped] = conj_action(W, w, k);
      FreeDElement factor =
          flipped ? fd_sub(fd_one(), fd_gen(kp)) : fd_gen(kp);
      acc = fd_mul(acc, factor);
    }
    out = fd_add(out, acc);
  }
  return out;
}

FreeDElement derivation(const DihedralDatum& W, int k, const FreeDElement& a) {
  if (k < 1 || k > W.m) throw std::invalid_argument("reflection index");
  GroupElement rk = reflection(W, k);
  FreeDElement out;
  for (const auto& [word, c] : a) {
    for (size_t i = 0; i < word.size(); ++i) {
      if (word[i] != k) continue;
      FreeDElement prefix =
          fd_act(W, rk, fd_word(Word(word.begin(), word.begin() + i)));
      FreeDElement term =
          fd_mul(prefix, fd_word(Word(word.begin() + i + 1, word.end())));
      out = fd_add(out, fd_scale(term, c));
    }
  }
  return out;
}

std::vector<Word> word_basis(int m, int maxdeg) {
  if (m < 2 || m > 6 || maxdeg < 0) throw std::invalid_argument("word_basis");
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (int d = 1; d <= maxdeg; ++d) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (uint8_t k = 1; k <= m; ++k) {
        if (!w.empty() && w.back() == k) continue;
        Word v = w;
        v.push_back(k);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

size_t word_count(int m, int maxdeg) {
  size_t total = 1, level = 1;
  for (int d = 1; d <= maxdeg; ++d) {
    level *= d == 1 ? m : m - 1;
    total += level;
  }
  return total;
}

size_t rank_word(int m, const Word& w) {
  if (w.empty()) return 0;
  size_t off = word_count(m, int(w.size()) - 1);
  size_t idx = 0, width = 1;
  for (size_t j = 1; j < w.size(); ++j) width *= m - 1;
  idx += size_t(w[0] - 1) * width;
  for (size_t i = 1; i < w.size(); ++i) {
    width /= m - 1;
    idx += size_t(w[i] - 1 - (w[i] > w[i - 1] ? 1 : 0)) * width;
  }
  return off + idx;
}

FreeDElement fd_parse(int m, std::string_view s) {
  FreeDElement out;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw std::runtime_error("fd_parse: expected + or - at offset " +
                               std::to_string(i));
    }
    first = false;
    mpz_class coeff = 1;
    bool saw_any = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string digits;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        digits += s[i++];
      coeff = mpz_class(digits);
      saw_any = true;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      }
    }
    Word w;
    while (i < s.size() && s[i] == 'D') {
      ++i;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::runtime_error("fd_parse: bad generator at offset " +
                                 std::to_string(i));
      int k = s[i++] - '0';
      if (k < 1 || k > m)
        throw std::runtime_error("fd_parse: generator index out of range");
      if (!w.empty() && w.back() == k)
        throw std::runtime_error("fd_parse: adjacent repeat");
      w.push_back(uint8_t(k));
      saw_any = true;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      }
    }
    if (!saw_any)
      throw std::runtime_error("fd_parse: expected term at offset " +
                               std::to_string(i));
    fd_add_term(out, w, sign * coeff);
    skip();
  }
  if (first) throw std::runtime_error("fd_parse: empty input");
  return out;
}

std::string fd_render(const FreeDElement& a) {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : a) {
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string word;
    for (uint8_t k : w) {
      if (!word.empty()) word += " ";
      word += "D" + std::to_string(k);
    }
    if (word.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += word;
    } else {
      out += mag.get_str() + " " + word;
    }
  }
  return out;
}

}  // namespace hf::freed
