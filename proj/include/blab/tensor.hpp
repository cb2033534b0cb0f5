// The symplectic space V of dimension 2m, its skew form and dual basis, the
// right Brauer-algebra action on V^(x)n, contraction/expansion operators,
// the induced bilinear form, weights and weight blocks, and the vectors
// alpha, v_lambda and z_{g,lambda}.
//
// Basis tensors are coded 4 bits per slot (slot j at bits 4j, values 1..2m),
// so m <= 7 and n <= 16; far beyond desk scale.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "blab/diagrams.hpp"
#include "blab/partitions.hpp"
#include "blab/perm.hpp"
#include "blab/scalars.hpp"

namespace blab {

using Code = std::uint64_t;

inline int slot_get(Code c, int j) { return static_cast<int>((c >> (4 * j)) & 0xF); }
inline Code slot_set(Code c, int j, int v) {
  return (c & ~(Code(0xF) << (4 * j))) | (Code(v) << (4 * j));
}
inline Code code_of(const std::vector<int>& idx) {
  Code c = 0;
  for (size_t j = 0; j < idx.size(); ++j) c = slot_set(c, static_cast<int>(j), idx[j]);
  return c;
}
inline std::vector<int> index_of(Code c, int n) {
  std::vector<int> idx(n);
  for (int j = 0; j < n; ++j) idx[j] = slot_get(c, j);
  return idx;
}

// <v_i, v_j>: nonzero only on dual pairs j = i' = 2m+1-i.
inline int form_sign(int m, int i, int j) {
  if (i + j != 2 * m + 1) return 0;
  return i <= m ? 1 : -1;
}
// v_i^* = sign * v_{i'} with <v_i, v_i^*> = 1.
inline std::pair<int, int> dual_index(int m, int i) {
  return {2 * m + 1 - i, i <= m ? 1 : -1};
}

inline Weight weight_of(int m, Code code, int n) {
  Weight w(m, 0);
  for (int j = 0; j < n; ++j) {
    int a = slot_get(code, j);
    if (a <= m)
      w[a - 1] += 1;
    else
      w[2 * m - a] -= 1;
  }
  return w;
}

// All tensor indices in lexicographic tuple order.
inline std::vector<Code> all_codes(int m, int n) {
  std::vector<Code> out;
  std::vector<int> idx(n, 1);
  for (;;) {
    out.push_back(code_of(idx));
    int j = n - 1;
    while (j >= 0 && idx[j] == 2 * m) {
      idx[j] = 1;
      --j;
    }
    if (j < 0) break;
    idx[j]++;
  }
  if (n == 0) out = {0};
  return out;
}

// ---------------------------------------------------------------------------

template <class E>
struct TensorVector {
  int m = 0, n = 0;
  std::map<Code, E> c;

  TensorVector() = default;
  TensorVector(int m_, int n_) : m(m_), n(n_) {}
  static TensorVector basis(int m, int n, Code code) {
    TensorVector v(m, n);
    v.c.emplace(code, E(1));
    return v;
  }

  bool is_zero() const { return c.empty(); }

  void add_term(Code code, const E& x) {
    if (x.is_zero()) return;
    auto it = c.find(code);
    if (it == c.end())
      c.emplace(code, x);
    else {
      it->second += x;
      if (it->second.is_zero()) c.erase(it);
    }
  }

  TensorVector& operator+=(const TensorVector& o) {
    check(o);
    for (const auto& [k, x] : o.c) add_term(k, x);
    return *this;
  }
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  TensorVector scaled(const E& x) const {
    TensorVector r(m, n);
    if (x.is_zero()) return r;
    for (const auto& [k, y] : c) r.add_term(k, y * x);
    return r;
  }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) {
    return a += b.scaled(E(-1));
  }
  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.m == b.m && a.n == b.n && a.c == b.c;
  }

  friend TensorVector tensor_product(const TensorVector& a, const TensorVector& b) {
    if (a.m != b.m) throw std::invalid_argument("tensor_product: space mismatch");
    TensorVector r(a.m, a.n + b.n);
    for (const auto& [ka, xa] : a.c)
      for (const auto& [kb, xb] : b.c) r.add_term(ka | (kb << (4 * a.n)), xa * xb);
    return r;
  }

  // `m=2;n=3;{(1,2,4): 1/1, (2,1,4): -1/1}`; indices in tuple order
  template <class F>
  std::string str(const F& f) const {
    std::map<std::vector<int>, std::string> rows;
    for (const auto& [k, x] : c) rows.emplace(index_of(k, n), f.str(x));
    std::string s = "m=" + std::to_string(m) + ";n=" + std::to_string(n) + ";{";
    bool first = true;
    for (const auto& [idx, val] : rows) {
      if (!first) s += ", ";
      first = false;
      s += "(";
      for (size_t j = 0; j < idx.size(); ++j) s += (j ? "," : "") + std::to_string(idx[j]);
      s += "): " + val;
    }
    return s + "}";
  }

 private:
  void check(const TensorVector& o) const {
    if (m != o.m || n != o.n) throw std::invalid_argument("TensorVector: shape mismatch");
  }
};

// alpha = sum_k v_k (x) v_k^*, the invariant vector of V^(x)2.
template <class F>
TensorVector<typename F::Elem> alpha(const F& f, int m) {
  TensorVector<typename F::Elem> v(m, 2);
  for (int k = 1; k <= 2 * m; ++k) {
    auto [kd, sign] = dual_index(m, k);
    v.add_term(code_of({k, kd}), f.from_int(sign));
  }
  return v;
}

template <class F>
TensorVector<typename F::Elem> v_lambda(const F& f, int m, const Partition& lam) {
  if (static_cast<int>(lam.size()) > m) throw std::invalid_argument("v_lambda: too many parts");
  std::vector<int> idx;
  for (size_t r = 0; r < lam.size(); ++r) idx.insert(idx.end(), lam[r], static_cast<int>(r) + 1);
  return TensorVector<typename F::Elem>::basis(m, static_cast<int>(idx.size()), code_of(idx));
}

// ---------------------------------------------------------------------------
// Right action. s_j is the negated swap of adjacent factors; e_j and more
// generally e_{s,t} act as -C_{s,t} D_{s,t} (contract, then re-expand with
// alpha), which is what the defining relations force.

template <class F>
TensorVector<typename F::Elem> act_generator(const F& f, const TensorVector<typename F::Elem>& v,
                                             char kind, int j) {
  if (j < 1 || j >= v.n) throw std::out_of_range("act_generator: index");
  const int m = v.m;
  TensorVector<typename F::Elem> r(v.m, v.n);
  for (const auto& [k, x] : v.c) {
    int a = slot_get(k, j - 1), b = slot_get(k, j);
    if (kind == 's') {
      Code t = slot_set(slot_set(k, j - 1, b), j, a);
      r.add_term(t, f.from_int(-1) * x);
    } else {
      int fs = form_sign(m, a, b);
      if (fs == 0) continue;
      for (int w = 1; w <= 2 * m; ++w) {
        auto [wd, sign] = dual_index(m, w);
        Code t = slot_set(slot_set(k, j - 1, w), j, wd);
        r.add_term(t, f.from_int(-fs * sign) * x);
      }
    }
  }
  return r;
}

// Signed place permutation: the action of the permutation diagram.
template <class F>
TensorVector<typename F::Elem> act_permutation(const F& f, const TensorVector<typename F::Elem>& v,
                                               const Permutation& p) {
  if (p.size() != v.n) throw std::invalid_argument("act_permutation: size mismatch");
  TensorVector<typename F::Elem> r(v.m, v.n);
  const auto sgn = f.from_int(p.sign());
  for (const auto& [k, x] : v.c) {
    Code t = 0;
    for (int j = 1; j <= v.n; ++j) t = slot_set(t, p(j) - 1, slot_get(k, j - 1));
    r.add_term(t, sgn * x);
  }
  return r;
}

template <class F>
TensorVector<typename F::Elem> act_diagram(const F& f, const TensorVector<typename F::Elem>& v,
                                           const BrauerDiagram& d) {
  if (d.size() != v.n) throw std::invalid_argument("act_diagram: size mismatch");
  DiagramWord w = diagram_to_word(d);
  TensorVector<typename F::Elem> r = act_permutation(f, v, w.sigma1);
  for (int i = 0; i < w.f; ++i) r = act_generator(f, r, 'e', 2 * i + 1);
  return act_permutation(f, r, w.sigma2);
}

// The action is defined at delta = -2m only; anything else is rejected.
template <class F>
TensorVector<typename F::Elem> act_element(const F& f, const TensorVector<typename F::Elem>& v,
                                           const AlgebraElement<typename F::Elem>& a) {
  if (a.n != v.n) throw std::invalid_argument("act_element: size mismatch");
  if (!(a.delta == f.from_int(-2 * v.m)))
    throw std::invalid_argument("act_element: loop parameter is not -2m in this field");
  auto& reg = DiagramRegistry::get();
  TensorVector<typename F::Elem> r(v.m, v.n);
  for (const auto& [id, coeff] : a.terms)
    r += act_diagram(f, v, reg.diagram(a.n, id)).scaled(coeff);
  return r;
}

// (s,t)-contraction V^(x)n -> V^(x)(n-2).
template <class F>
TensorVector<typename F::Elem> contraction(const F& f, const TensorVector<typename F::Elem>& v,
                                           int s, int t) {
  if (!(1 <= s && s < t && t <= v.n)) throw std::out_of_range("contraction: indices");
  TensorVector<typename F::Elem> r(v.m, v.n - 2);
  for (const auto& [k, x] : v.c) {
    int fs = form_sign(v.m, slot_get(k, s - 1), slot_get(k, t - 1));
    if (fs == 0) continue;
    Code out = 0;
    int pos = 0;
    for (int j = 0; j < v.n; ++j) {
      if (j == s - 1 || j == t - 1) continue;
      out = slot_set(out, pos++, slot_get(k, j));
    }
    r.add_term(out, f.from_int(fs) * x);
  }
  return r;
}

// (s,t)-expansion V^(x)(n-2) -> V^(x)n; inserts v_k at s and v_k^* at t.
template <class F>
TensorVector<typename F::Elem> expansion(const F& f, const TensorVector<typename F::Elem>& v,
                                         int s, int t) {
  const int n = v.n + 2;
  if (!(1 <= s && s < t && t <= n)) throw std::out_of_range("expansion: indices");
  TensorVector<typename F::Elem> r(v.m, n);
  for (const auto& [k, x] : v.c) {
    for (int w = 1; w <= 2 * v.m; ++w) {
      auto [wd, sign] = dual_index(v.m, w);
      Code out = 0;
      int src = 0;
      for (int j = 0; j < n; ++j) {
        if (j == s - 1)
          out = slot_set(out, j, w);
        else if (j == t - 1)
          out = slot_set(out, j, wd);
        else
          out = slot_set(out, j, slot_get(k, src++));
      }
      r.add_term(out, f.from_int(sign) * x);
    }
  }
  return r;
}

// Product bilinear form on V^(x)n.
template <class F>
typename F::Elem bilinear(const F& f, const TensorVector<typename F::Elem>& v,
                          const TensorVector<typename F::Elem>& w) {
  if (v.m != w.m || v.n != w.n) throw std::invalid_argument("bilinear: shape mismatch");
  typename F::Elem acc = f.zero();
  for (const auto& [k, x] : v.c) {
    Code dualcode = 0;
    int sign = 1;
    for (int j = 0; j < v.n; ++j) {
      int a = slot_get(k, j);
      dualcode = slot_set(dualcode, j, 2 * v.m + 1 - a);
      if (a > v.m) sign = -sign;
    }
    auto it = w.c.find(dualcode);
    if (it != w.c.end()) acc += f.from_int(sign) * x * it->second;
  }
  return acc;
}

// z_{g,lambda}: alpha^(x)g tensor v_lambda, acted on by the w_lambda diagram
// and the row symmetrizer of lambda' on the last n-2g strands, normalized by
// sign(w_lambda) so that the quantized vector Z_{g,lambda} specializes to it
// at q = 1 exactly.
template <class F>
TensorVector<typename F::Elem> z_vector(const F& f, int m, int n, int g, const Partition& lam) {
  if (partition_size(lam) != n - 2 * g || g < 0 || 2 * g > n)
    throw std::invalid_argument("z_vector: |lambda| != n - 2g");
  if (static_cast<int>(lam.size()) > m) throw std::invalid_argument("z_vector: too many parts");

  TensorVector<typename F::Elem> base(m, 0);
  base.add_term(0, f.one());
  auto al = alpha(f, m);
  for (int i = 0; i < g; ++i) base = tensor_product(base, al);
  if (n > 2 * g) base = tensor_product(base, v_lambda(f, m, lam));

  const int k = n - 2 * g;
  Permutation w = w_lambda(lam, k);
  auto r = act_permutation(f, base, w.shifted(n, 2 * g));
  TensorVector<typename F::Elem> acc(m, n);
  for (const auto& u : young_subgroup(conjugate(lam), k))
    acc += act_permutation(f, r, u.shifted(n, 2 * g));
  return acc.scaled(f.from_int(w.sign()));
}

// ---------------------------------------------------------------------------
// Weight blocks of V^(x)n. The Brauer action preserves them; the Chevalley
// operators shift them predictably. Cached per (m, n).

struct WeightBlocks {
  int m = 0, n = 0;
  std::vector<Weight> weights;                       // sorted
  std::map<Weight, int> index;                       // weight -> block number
  std::vector<std::vector<Code>> codes;              // block -> codes (ascending)
  std::vector<std::unordered_map<Code, int>> pos;    // block -> code -> offset

  static const WeightBlocks& get(int m, int n);

  int block_of(const Weight& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
  }
};

// All tensor indices of the given weight, in block (ascending code) order.
inline const std::vector<Code>& weight_subspace(int m, int n, const Weight& mu) {
  static const std::vector<Code> empty;
  const auto& wb = WeightBlocks::get(m, n);
  int b = wb.block_of(mu);
  return b < 0 ? empty : wb.codes[b];
}

template <class F>
std::vector<typename F::Elem> to_block_row(const F& f, const TensorVector<typename F::Elem>& v,
                                           const WeightBlocks& wb, int block) {
  std::vector<typename F::Elem> row(wb.codes[block].size(), f.zero());
  const auto& pos = wb.pos[block];
  for (const auto& [k, x] : v.c) {
    auto it = pos.find(k);
    if (it == pos.end()) throw std::logic_error("to_block_row: vector not supported on block");
    row[it->second] = x;
  }
  return row;
}

template <class F>
TensorVector<typename F::Elem> from_block_row(const F& f, const std::vector<typename F::Elem>& row,
                                              const WeightBlocks& wb, int block) {
  TensorVector<typename F::Elem> v(wb.m, wb.n);
  for (size_t i = 0; i < row.size(); ++i)
    if (!f.is_zero(row[i])) v.add_term(wb.codes[block][i], row[i]);
  return v;
}

}  // namespace blab
