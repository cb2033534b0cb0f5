// Divided-power Chevalley raising/lowering operators of sp_2m acting on
// V^(x)n, the computational stand-in for the hyperalgebra: maximal-vector
// spaces as joint kernels, and the commutant (equivariant endomorphism)
// dimension of a stable subquotient, solved blockwise per weight.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "blab/linalg.hpp"
#include "blab/parallel.hpp"
#include "blab/tensor.hpp"

namespace blab {

struct ChevalleyOp {
  bool raise = true;
  int i = 1;  // simple root index, 1..m
  int k = 1;  // divided power
};

// One-box transition on basis vectors of V: value a -> (b, sign), or nothing.
inline std::optional<std::pair<int, int>> one_box(int m, bool raise, int i, int a) {
  if (i < 1 || i > m) throw std::out_of_range("one_box: root index");
  if (raise) {
    if (i < m) {
      if (a == i + 1) return {{i, 1}};                            // E_{i,i+1}
      if (a == 2 * m + 1 - i) return {{2 * m - i, -1}};           // -E_{(i+1)',i'}
    } else if (a == m + 1) {
      return {{m, 1}};                                            // E_{m,m'}
    }
  } else {
    if (i < m) {
      if (a == i) return {{i + 1, 1}};                            // E_{i+1,i}
      if (a == 2 * m - i) return {{2 * m + 1 - i, -1}};           // -E_{i',(i+1)'}
    } else if (a == m) {
      return {{m + 1, 1}};                                        // E_{m',m}
    }
  }
  return std::nullopt;
}

// The 2m x 2m integer matrix of the one-box operator (rows act from the left).
inline std::vector<std::vector<int>> chevalley_matrix(int m, bool raise, int i) {
  std::vector<std::vector<int>> X(2 * m, std::vector<int>(2 * m, 0));
  for (int a = 1; a <= 2 * m; ++a)
    if (auto r = one_box(m, raise, i, a)) X[r->first - 1][a - 1] = r->second;
  return X;
}

// Weight shift of e_i^(k) (or its lowering mirror): +-k alpha_i with
// alpha_i = eps_i - eps_{i+1} for i < m and alpha_m = 2 eps_m.
inline Weight op_shift(int m, const ChevalleyOp& op) {
  Weight s(m, 0);
  int dir = op.raise ? 1 : -1;
  if (op.i < m) {
    s[op.i - 1] = dir * op.k;
    s[op.i] = -dir * op.k;
  } else {
    s[m - 1] = 2 * dir * op.k;
  }
  return s;
}

// Divided power action: each generator squares to zero on V, so e_i^(k) acts
// by the sum over k-element subsets of tensor positions of the one-box maps.
template <class F>
TensorVector<typename F::Elem> act_divided(const F& f, const TensorVector<typename F::Elem>& v,
                                           const ChevalleyOp& op) {
  TensorVector<typename F::Elem> out(v.m, v.n);
  for (const auto& [code, coeff] : v.c) {
    // positions where the one-box map applies
    std::vector<std::pair<int, std::pair<int, int>>> hits;  // (pos, (newval, sign))
    for (int j = 0; j < v.n; ++j)
      if (auto r = one_box(v.m, op.raise, op.i, slot_get(code, j))) hits.emplace_back(j, *r);
    const int h = static_cast<int>(hits.size());
    if (h < op.k) continue;
    // iterate k-subsets of hits
    std::vector<int> pick(op.k);
    for (int t = 0; t < op.k; ++t) pick[t] = t;
    for (;;) {
      Code c = code;
      int sign = 1;
      for (int t = 0; t < op.k; ++t) {
        const auto& [pos, nb] = hits[pick[t]];
        c = slot_set(c, pos, nb.first);
        sign *= nb.second;
      }
      out.add_term(c, f.from_int(sign) * coeff);
      int t = op.k - 1;
      while (t >= 0 && pick[t] == h - op.k + t) --t;
      if (t < 0) break;
      ++pick[t];
      for (int u = t + 1; u < op.k; ++u) pick[u] = pick[u - 1] + 1;
    }
  }
  return out;
}

// Build-time sanity for the derived Chevalley matrices: X^T J + J X = 0 and
// both one-box operators annihilate alpha. A failure is a configuration error.
void ensure_chevalley_valid(int m);

// All operators used for maximal vectors and commutants: both kinds, every
// simple root, divided powers up to max_k (higher ones vanish on V^(x)n).
// Over a field of characteristic zero, k = 1 already cuts out the same joint
// kernels and commutants, since e^(k) = e^k / k! there.
inline std::vector<ChevalleyOp> all_ops(int m, int max_k, bool raises_only = false) {
  std::vector<ChevalleyOp> ops;
  for (int i = 1; i <= m; ++i)
    for (int k = 1; k <= max_k; ++k) {
      ops.push_back({true, i, k});
      if (!raises_only) ops.push_back({false, i, k});
    }
  return ops;
}

template <class F>
int divided_power_bound(const F& f, int n) {
  return f.characteristic() == 0 ? 1 : n;
}

// Matrix of op restricted to one weight block, rows = target block codes.
// Returns an empty matrix when the target block is empty (the image is 0).
template <class F>
Mat<F> op_block_matrix(const F& f, const WeightBlocks& wb, const ChevalleyOp& op, int src_block) {
  Weight tw = wb.weights[src_block];
  Weight shift = op_shift(wb.m, op);
  for (int i = 0; i < wb.m; ++i) tw[i] += shift[i];
  int dst = wb.block_of(tw);
  const int cols = static_cast<int>(wb.codes[src_block].size());
  if (dst < 0) return Mat<F>(f, 0, cols);
  Mat<F> M(f, static_cast<int>(wb.codes[dst].size()), cols);
  for (int c = 0; c < cols; ++c) {
    auto img = act_divided(f, TensorVector<typename F::Elem>::basis(wb.m, wb.n, wb.codes[src_block][c]), op);
    for (const auto& [code, x] : img.c) M.at(wb.pos[dst].at(code), c) = x;
  }
  return M;
}

// Joint kernel, inside the lam weight block, of all divided-power raising
// operators: the space of maximal vectors of weight lam.
template <class F>
Subspace<F> maximal_vectors(const F& f, int m, int n, const Partition& lam) {
  ensure_chevalley_valid(m);
  const auto& wb = WeightBlocks::get(m, n);
  int blk = wb.block_of(weight_of_partition(lam, m));
  if (blk < 0) return Subspace<F>{0, Mat<F>(), {}};
  const int dim = static_cast<int>(wb.codes[blk].size());

  std::vector<Mat<F>> pieces;
  int total_rows = 0;
  for (const auto& op : all_ops(m, divided_power_bound(f, n), /*raises_only=*/true)) {
    pieces.push_back(op_block_matrix(f, wb, op, blk));
    total_rows += pieces.back().rows;
  }
  Mat<F> stacked(f, total_rows, dim);
  int r = 0;
  for (const auto& P : pieces)
    for (int i = 0; i < P.rows; ++i, ++r)
      for (int j = 0; j < dim; ++j) stacked.at(r, j) = P.at(i, j);
  return kernel(f, std::move(stacked));
}

// ---------------------------------------------------------------------------
// Blockwise subspaces of V^(x)n.

template <class F>
struct BlockedSubspace {
  int m = 0, n = 0;
  std::map<Weight, Subspace<F>> parts;  // only blocks of positive dimension

  long long total_dim() const {
    long long d = 0;
    for (const auto& [w, s] : parts) d += s.dim();
    return d;
  }
  int block_dim(const Weight& w) const {
    auto it = parts.find(w);
    return it == parts.end() ? 0 : it->second.dim();
  }
  friend bool operator==(const BlockedSubspace& a, const BlockedSubspace& b) {
    return a.m == b.m && a.n == b.n && a.parts == b.parts;
  }
};

template <class F>
BlockedSubspace<F> full_space(const F& f, int m, int n) {
  BlockedSubspace<F> out{m, n, {}};
  const auto& wb = WeightBlocks::get(m, n);
  for (size_t b = 0; b < wb.weights.size(); ++b) {
    const int d = static_cast<int>(wb.codes[b].size());
    Subspace<F> s;
    s.ambient = d;
    s.basis = Mat<F>(f, d, d);
    for (int i = 0; i < d; ++i) {
      s.basis.at(i, i) = f.one();
      s.pivots.push_back(i);
    }
    out.parts.emplace(wb.weights[b], std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commutant oracle. Computes dim End(A/B) over the divided-power operators
// (weight blocks are preserved by definition of an equivariant map). B may be
// empty; both spaces must be operator-stable, which is verified.

namespace detail {

// Rewrites the rows of `inner` (a subspace of the block expressed in ambient
// coordinates) in terms of the RREF basis rows of `outer`. Requires
// containment; the coefficient of row r is the value at outer's r-th pivot.
template <class F>
Mat<F> inner_coordinates(const F& f, const Subspace<F>& outer, const Subspace<F>& inner) {
  Mat<F> M(f, inner.dim(), outer.dim());
  for (int i = 0; i < inner.dim(); ++i) {
    auto row = inner.basis.row(i);
    if (!outer.contains(f, row))
      throw std::invalid_argument("commutant: subspace not contained in ambient space");
    for (int r = 0; r < outer.dim(); ++r) M.at(i, r) = row[outer.pivots[r]];
  }
  return M;
}

}  // namespace detail

template <class F>
long long commutant_dimension(const F& f, const BlockedSubspace<F>& A,
                              const BlockedSubspace<F>* B = nullptr) {
  ensure_chevalley_valid(A.m);
  const auto& wb = WeightBlocks::get(A.m, A.n);
  const int nblocks = static_cast<int>(wb.weights.size());

  // Quotient data per block: complement coordinates inside A's inner basis
  // (non-pivot coordinates of B expressed in terms of A's rows).
  struct QBlock {
    int adim = 0;                  // dim A_mu
    Subspace<F> binner;            // B_mu in A-inner coordinates (RREF)
    std::vector<int> complement;   // non-pivot inner coordinates
    const Subspace<F>* a = nullptr;
  };
  std::vector<QBlock> q(nblocks);
  for (int b = 0; b < nblocks; ++b) {
    auto it = A.parts.find(wb.weights[b]);
    if (it == A.parts.end()) continue;
    QBlock& qb = q[b];
    qb.a = &it->second;
    qb.adim = it->second.dim();
    std::vector<std::vector<typename F::Elem>> brows;
    if (B != nullptr) {
      auto jt = B->parts.find(wb.weights[b]);
      if (jt != B->parts.end()) {
        Mat<F> inner = detail::inner_coordinates(f, it->second, jt->second);
        for (int i = 0; i < inner.rows; ++i) brows.push_back(inner.row(i));
      }
    }
    qb.binner = span(f, brows, qb.adim);
    std::vector<char> piv(qb.adim, 0);
    for (int p : qb.binner.pivots) piv[p] = 1;
    for (int c = 0; c < qb.adim; ++c)
      if (!piv[c]) qb.complement.push_back(c);
  }

  std::vector<int> qdim(nblocks), offset(nblocks);
  long long unknowns = 0;
  for (int b = 0; b < nblocks; ++b) {
    qdim[b] = static_cast<int>(q[b].complement.size());
    offset[b] = static_cast<int>(unknowns);
    unknowns += static_cast<long long>(qdim[b]) * qdim[b];
  }
  if (unknowns == 0) return 0;

  // Projects an ambient block-row into quotient (complement) coordinates at
  // dst, verifying on the way that it lies in A_dst: project-after-act.
  auto project = [&](const std::vector<typename F::Elem>& row, int dst,
                     bool must_vanish) -> std::vector<typename F::Elem> {
    const QBlock& qd = q[dst];
    if (qd.adim == 0) {
      for (const auto& x : row)
        if (!f.is_zero(x))
          throw std::invalid_argument("commutant: space is not operator-stable");
      return {};
    }
    if (!qd.a->contains(f, row))
      throw std::invalid_argument("commutant: space is not operator-stable");
    std::vector<typename F::Elem> inner(qd.adim, f.zero());
    for (int r = 0; r < qd.adim; ++r) inner[r] = row[qd.a->pivots[r]];
    auto red = qd.binner.reduce(f, inner);
    if (must_vanish) {
      for (int c : qd.complement)
        if (!f.is_zero(red[c]))
          throw std::invalid_argument("commutant: quotient space is not operator-stable");
      return {};
    }
    std::vector<typename F::Elem> out(qd.complement.size(), f.zero());
    for (size_t t = 0; t < qd.complement.size(); ++t) out[t] = red[qd.complement[t]];
    return out;
  };

  struct Job {
    ChevalleyOp op;
    int src, dst;
  };
  std::vector<Job> jobs;
  for (const auto& op : all_ops(A.m, divided_power_bound(f, A.n))) {
    Weight shift = op_shift(A.m, op);
    for (int src = 0; src < nblocks; ++src) {
      if (q[src].adim == 0) continue;
      Weight tw = wb.weights[src];
      for (int i = 0; i < A.m; ++i) tw[i] += shift[i];
      int dst = wb.block_of(tw);
      if (dst < 0) continue;  // the operator maps this block to zero
      jobs.push_back({op, src, dst});
    }
  }

  // Constraint rows M_dst P - P M_src = 0, assembled per job in parallel.
  std::vector<std::vector<std::vector<typename F::Elem>>> rows_per_job(jobs.size());
  std::vector<std::string> errors(jobs.size());
  par::for_each(jobs.size(), [&](std::size_t ji) {
    try {
      const auto& [op, src, dst] = jobs[ji];
      const QBlock& qs = q[src];

      // B must be carried into B (the induced map is otherwise ill-defined).
      for (int i = 0; i < qs.binner.dim(); ++i) {
        std::vector<typename F::Elem> amb(qs.a->ambient, f.zero());
        for (int r = 0; r < qs.adim; ++r) {
          const auto& coef = qs.binner.basis.at(i, r);
          if (f.is_zero(coef)) continue;
          for (int j = 0; j < qs.a->ambient; ++j) amb[j] += coef * qs.a->basis.at(r, j);
        }
        auto img = act_divided(f, from_block_row(f, amb, wb, src), op);
        project(to_block_row(f, img, wb, dst), dst, /*must_vanish=*/true);
      }

      // Induced matrix P on the quotient.
      Mat<F> P(f, qdim[dst], qdim[src]);
      for (int c = 0; c < qdim[src]; ++c) {
        auto amb = qs.a->basis.row(qs.complement[c]);
        auto img = act_divided(f, from_block_row(f, amb, wb, src), op);
        auto col = project(to_block_row(f, img, wb, dst), dst, qdim[dst] == 0);
        for (int t = 0; t < qdim[dst]; ++t) P.at(t, c) = col[t];
      }

      auto& rows = rows_per_job[ji];
      for (int t = 0; t < qdim[dst]; ++t)
        for (int c = 0; c < qdim[src]; ++c) {
          std::vector<typename F::Elem> row(unknowns, f.zero());
          bool nonzero = false;
          for (int s = 0; s < qdim[dst]; ++s) {
            if (f.is_zero(P.at(s, c))) continue;
            row[offset[dst] + t * qdim[dst] + s] += P.at(s, c);
            nonzero = true;
          }
          for (int s = 0; s < qdim[src]; ++s) {
            if (f.is_zero(P.at(t, s))) continue;
            row[offset[src] + s * qdim[src] + c] -= P.at(t, s);
            nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
    } catch (const std::exception& e) {
      errors[ji] = e.what();
    }
  });
  for (const auto& e : errors)
    if (!e.empty()) throw std::invalid_argument(e);

  std::size_t total = 0;
  for (const auto& r : rows_per_job) total += r.size();
  Mat<F> sys(f, static_cast<int>(total), static_cast<int>(unknowns));
  int at = 0;
  for (const auto& batch : rows_per_job)
    for (const auto& row : batch) sys.set_row(at++, row);
  return unknowns - rank_in_place(f, sys);
}

}  // namespace blab
