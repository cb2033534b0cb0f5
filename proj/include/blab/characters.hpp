// Symplectic character combinatorics: Weyl characters and dimensions for
// type C_m, tensor-power multiplicities by up-down path counting, and the
// greedy expansion of ch(V)^n into Weyl characters. This module is pure
// integer arithmetic and serves as the character-theoretic oracle.
#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "blab/partitions.hpp"

namespace blab {

using ExpVec = std::vector<int>;

// Integer Laurent polynomial in x_1..x_m, exponent vector -> coefficient.
class CharPoly {
 public:
  CharPoly() = default;
  explicit CharPoly(int m) : m_(m) {}

  int vars() const { return m_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<ExpVec, long long>& terms() const { return t_; }

  void add_term(const ExpVec& e, long long c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end())
      t_.emplace(e, c);
    else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  long long coeff(const ExpVec& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? 0 : it->second;
  }

  CharPoly& operator+=(const CharPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  CharPoly& operator-=(const CharPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend CharPoly operator*(const CharPoly& a, const CharPoly& b) {
    CharPoly r(a.m_);
    ExpVec e(a.m_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        for (int i = 0; i < a.m_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.t_ == b.t_; }

  // lexicographically largest exponent present
  const ExpVec& lex_max() const {
    if (t_.empty()) throw std::logic_error("CharPoly: empty");
    return t_.rbegin()->first;
  }

 private:
  int m_ = 0;
  std::map<ExpVec, long long> t_;
};

// Elements of the hyperoctahedral group W(C_m): a permutation, a sign per
// coordinate, and the determinant of the corresponding orthogonal matrix.
struct SignedPerm {
  std::vector<int> perm;   // 0-based images
  std::vector<int> signs;  // +-1
  int det;
};

inline std::vector<SignedPerm> hyperoctahedral_elements(int m) {
  std::vector<int> base(m);
  for (int i = 0; i < m; ++i) base[i] = i;
  std::vector<SignedPerm> out;
  std::vector<int> p = base;
  do {
    int psign = 1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (p[i] > p[j]) psign = -psign;
    for (int mask = 0; mask < (1 << m); ++mask) {
      SignedPerm w;
      w.perm = p;
      w.signs.resize(m);
      int s = psign;
      for (int i = 0; i < m; ++i) {
        w.signs[i] = (mask >> i) & 1 ? -1 : 1;
        s *= w.signs[i];
      }
      w.det = s;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline ExpVec apply_signed_perm(const SignedPerm& w, const ExpVec& v) {
  ExpVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = w.signs[i] * v[w.perm[i]];
  return r;
}

namespace detail {

inline CharPoly weyl_alternating_sum(const ExpVec& v, int m) {
  CharPoly r(m);
  for (const auto& w : hyperoctahedral_elements(m)) r.add_term(apply_signed_perm(w, v), w.det);
  return r;
}

}  // namespace detail

// Weyl character of the co-Weyl module with highest weight lam, computed as
// the alternating-sum ratio over W(C_m). The division is exact; the divisor
// has lex-leading term x^rho with coefficient 1.
inline CharPoly weyl_character(const Partition& lam, int m) {
  if (static_cast<int>(lam.size()) > m) throw std::invalid_argument("weyl_character: too many parts");
  ExpVec rho(m), top(m);
  for (int i = 0; i < m; ++i) {
    rho[i] = m - i;
    top[i] = rho[i] + (i < static_cast<int>(lam.size()) ? lam[i] : 0);
  }
  CharPoly num = detail::weyl_alternating_sum(top, m);
  CharPoly den = detail::weyl_alternating_sum(rho, m);

  CharPoly quot(m);
  ExpVec shift(m);
  long guard = 0;
  while (!num.is_zero()) {
    if (++guard > 1000000) throw std::logic_error("weyl_character: division diverged");
    const ExpVec& lead = num.lex_max();
    long long c = num.coeff(lead);
    for (int i = 0; i < m; ++i) shift[i] = lead[i] - rho[i];
    quot.add_term(shift, c);
    CharPoly piece(m);
    piece.add_term(shift, c);
    num -= piece * den;
  }
  return quot;
}

// Dimension by the Weyl product formula over the positive roots of C_m.
inline long long dim_weyl(const Partition& lam, int m) {
  if (static_cast<int>(lam.size()) > m) throw std::invalid_argument("dim_weyl: too many parts");
  std::vector<long> l(m), r(m);
  for (int i = 0; i < m; ++i) {
    r[i] = m - i;
    l[i] = r[i] + (i < static_cast<int>(lam.size()) ? lam[i] : 0);
  }
  mpz_class num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= l[i];
    den *= r[i];
    for (int j = i + 1; j < m; ++j) {
      num *= (l[i] - l[j]) * (l[i] + l[j]);
      den *= (r[i] - r[j]) * (r[i] + r[j]);
    }
  }
  mpz_class d = num / den;
  if (d * den != num) throw std::logic_error("dim_weyl: non-integral");
  if (!d.fits_slong_p()) throw std::overflow_error("dim_weyl");
  return d.get_si();
}

// Multiplicity of nabla(lam) in V^(x)n: the number of length-n up-down paths
// empty -> lam in the Bratteli diagram of partitions with at most m rows.
inline long long tensor_multiplicity(const Partition& lam, int n, int m) {
  if (static_cast<int>(lam.size()) > m) return 0;
  if ((n - partition_size(lam)) % 2 != 0 || partition_size(lam) > n) return 0;

  static std::map<std::pair<int, int>, std::map<Partition, long long>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);

  auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::map<Partition, long long> cur{{Partition{}, 1}};
    for (int step = 0; step < n; ++step) {
      std::map<Partition, long long> next;
      for (const auto& [p, cnt] : cur) {
        for (auto& q : add_box(p, m)) next[std::move(q)] += cnt;
        for (auto& q : remove_box(p)) next[std::move(q)] += cnt;
      }
      cur = std::move(next);
    }
    it = cache.emplace(key, std::move(cur)).first;
  }
  auto jt = it->second.find(lam);
  return jt == it->second.end() ? 0 : jt->second;
}

// Alias used in reports: up-down tableaux of shape lam and length n.
inline long long updown_count(const Partition& lam, int n, int m) {
  return tensor_multiplicity(lam, n, m);
}

inline CharPoly vector_character(int m) {
  CharPoly ch(m);
  for (int i = 0; i < m; ++i) {
    ExpVec e(m, 0);
    e[i] = 1;
    ch.add_term(e, 1);
    e[i] = -1;
    ch.add_term(e, 1);
  }
  return ch;
}

// Expands ch(V)^n into Weyl characters by repeatedly subtracting the
// dominance-maximal dominant term (ties broken lexicographically, taking the
// larger). Must agree with tensor_multiplicity; both sides are tested.
inline std::map<Partition, long long> decompose_power(int n, int m) {
  CharPoly poly = vector_character(m);
  CharPoly acc(m);
  {
    ExpVec zero(m, 0);
    acc.add_term(zero, 1);
  }
  for (int i = 0; i < n; ++i) acc = acc * poly;

  std::map<Partition, long long> mults;
  long guard = 0;
  while (!acc.is_zero()) {
    if (++guard > 100000) throw std::logic_error("decompose_power diverged");
    bool found = false;
    Partition best;
    for (const auto& [e, c] : acc.terms()) {
      Partition p;
      bool dominant = true;
      for (int i = 0; i < m; ++i) {
        if (e[i] < 0 || (i + 1 < m && e[i] < e[i + 1])) {
          dominant = false;
          break;
        }
        if (e[i] > 0) p.push_back(e[i]);
      }
      if (!dominant || !is_partition(p)) continue;
      if (!found || dominance_leq(best, p, m) ||
          (!dominance_leq(p, best, m) && weight_of_partition(p, m) > weight_of_partition(best, m))) {
        best = p;
        found = true;
      }
    }
    if (!found) throw std::logic_error("decompose_power: no dominant term left");
    long long c = acc.coeff(weight_of_partition(best, m));
    if (c <= 0) throw std::logic_error("decompose_power: non-positive multiplicity");
    mults[best] += c;
    CharPoly piece = weyl_character(best, m);
    CharPoly scaled(m);
    for (const auto& [e, cc] : piece.terms()) scaled.add_term(e, cc * c);
    acc -= scaled;
  }
  return mults;
}

}  // namespace blab
