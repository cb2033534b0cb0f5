// Orchestrated verifications binding the three oracles: exact linear algebra
// on the tensor space, character combinatorics, and tableaux counting. Each
// suite computes the distinguished subspaces over the requested fields and
// checks the dimension, duality and surjectivity statements exactly.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blab/bmw.hpp"
#include "blab/characters.hpp"
#include "blab/diagrams.hpp"
#include "blab/hyperalg.hpp"
#include "blab/linalg.hpp"
#include "blab/parallel.hpp"
#include "blab/tensor.hpp"

namespace blab {

// ---------------------------------------------------------------------------
// Core subspace computations (blockwise per weight; blocks run in parallel).

// Action of a diagram on one weight block, columns indexed by block codes.
template <class F>
Mat<F> diagram_block_matrix(const F& f, const WeightBlocks& wb, const BrauerDiagram& d,
                            int block) {
  const auto& codes = wb.codes[block];
  Mat<F> M(f, static_cast<int>(codes.size()), static_cast<int>(codes.size()));
  for (size_t c = 0; c < codes.size(); ++c) {
    auto img = act_diagram(f, TensorVector<typename F::Elem>::basis(wb.m, wb.n, codes[c]), d);
    for (const auto& [code, x] : img.c) M.at(wb.pos[block].at(code), static_cast<int>(c)) = x;
  }
  return M;
}

// V^(x)n B_n^(f): the span of all v . d with d in the ideal basis.
template <class F>
BlockedSubspace<F> ideal_image(const F& f, int m, int n, int fidx) {
  if (fidx == 0) return full_space(f, m, n);
  BlockedSubspace<F> out{m, n, {}};
  if (fidx > n / 2) return out;

  auto& reg = DiagramRegistry::get();
  auto ids = ideal_basis(n, fidx);
  std::vector<const BrauerDiagram*> diagrams;
  for (auto id : ids) diagrams.push_back(&reg.diagram(n, id));

  const auto& wb = WeightBlocks::get(m, n);
  std::vector<Subspace<F>> per_block(wb.weights.size());
  par::for_each(wb.weights.size(), [&](std::size_t b) {
    const auto& codes = wb.codes[b];
    std::vector<std::vector<typename F::Elem>> rows;
    rows.reserve(codes.size() * diagrams.size());
    for (const BrauerDiagram* d : diagrams)
      for (Code c : codes) {
        auto img = act_diagram(f, TensorVector<typename F::Elem>::basis(m, n, c), *d);
        if (img.is_zero()) continue;
        rows.push_back(to_block_row(f, img, wb, static_cast<int>(b)));
      }
    per_block[b] = span(f, rows, static_cast<int>(codes.size()));
  });
  for (size_t b = 0; b < wb.weights.size(); ++b)
    if (per_block[b].dim() > 0) out.parts.emplace(wb.weights[b], std::move(per_block[b]));
  return out;
}

// Joint kernel of the action of every diagram in the f-th ideal basis.
template <class F>
BlockedSubspace<F> ideal_annihilator(const F& f, int m, int n, int fidx) {
  BlockedSubspace<F> out{m, n, {}};
  const auto& wb = WeightBlocks::get(m, n);
  auto ids = ideal_basis(n, fidx);
  if (ids.empty()) return full_space(f, m, n);

  auto& reg = DiagramRegistry::get();
  std::vector<const BrauerDiagram*> diagrams;
  for (auto id : ids) diagrams.push_back(&reg.diagram(n, id));

  std::vector<Subspace<F>> per_block(wb.weights.size());
  par::for_each(wb.weights.size(), [&](std::size_t b) {
    const int dim = static_cast<int>(wb.codes[b].size());
    Mat<F> stacked(f, dim * static_cast<int>(diagrams.size()), dim);
    for (size_t k = 0; k < diagrams.size(); ++k) {
      Mat<F> M = diagram_block_matrix(f, wb, *diagrams[k], static_cast<int>(b));
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) stacked.at(static_cast<int>(k) * dim + i, j) = M.at(i, j);
    }
    per_block[b] = kernel(f, std::move(stacked));
  });
  for (size_t b = 0; b < wb.weights.size(); ++b)
    if (per_block[b].dim() > 0) out.parts.emplace(wb.weights[b], std::move(per_block[b]));
  return out;
}

// Blockwise intersection of two blocked subspaces.
template <class F>
BlockedSubspace<F> intersect_blocked(const F& f, const BlockedSubspace<F>& a,
                                     const BlockedSubspace<F>& b) {
  BlockedSubspace<F> out{a.m, a.n, {}};
  for (const auto& [w, s] : a.parts) {
    auto it = b.parts.find(w);
    if (it == b.parts.end()) continue;
    auto inter = intersect(f, s, it->second);
    if (inter.dim() > 0) out.parts.emplace(w, std::move(inter));
  }
  return out;
}

// Partially harmonic tensors of valence f: vectors of V^(x)n B^(f) killed by
// the ideal B^(f+1).
template <class F>
BlockedSubspace<F> harmonic_space(const F& f, int m, int n, int fidx) {
  auto image = ideal_image(f, m, n, fidx);
  auto ann = ideal_annihilator(f, m, n, fidx + 1);
  return intersect_blocked(f, image, ann);
}

// The kernel of every (s,t)-contraction, computed directly from C_{s,t}.
template <class F>
BlockedSubspace<F> contraction_kernel(const F& f, int m, int n) {
  BlockedSubspace<F> out{m, n, {}};
  const auto& wb = WeightBlocks::get(m, n);
  const auto& wb2 = WeightBlocks::get(m, n - 2);

  std::vector<Subspace<F>> per_block(wb.weights.size());
  par::for_each(wb.weights.size(), [&](std::size_t b) {
    const int dim = static_cast<int>(wb.codes[b].size());
    int tblock = wb2.block_of(wb.weights[b]);
    std::vector<std::vector<typename F::Elem>> rows;
    if (tblock >= 0) {
      const int tdim = static_cast<int>(wb2.codes[tblock].size());
      for (int s = 1; s < n; ++s)
        for (int t = s + 1; t <= n; ++t) {
          Mat<F> M(f, tdim, dim);
          for (int c = 0; c < dim; ++c) {
            auto img = contraction(
                f, TensorVector<typename F::Elem>::basis(m, n, wb.codes[b][c]), s, t);
            for (const auto& [code, x] : img.c) M.at(wb2.pos[tblock].at(code), c) = x;
          }
          for (int i = 0; i < tdim; ++i) rows.push_back(M.row(i));
        }
    }
    Mat<F> stacked(f, static_cast<int>(rows.size()), dim);
    for (size_t i = 0; i < rows.size(); ++i) stacked.set_row(static_cast<int>(i), rows[i]);
    per_block[b] = kernel(f, std::move(stacked));
  });
  for (size_t b = 0; b < wb.weights.size(); ++b)
    if (per_block[b].dim() > 0) out.parts.emplace(wb.weights[b], std::move(per_block[b]));
  return out;
}

// Joint kernel of the e_{s,t} diagram actions over all pairs s < t.
template <class F>
BlockedSubspace<F> est_kernel(const F& f, int m, int n) {
  BlockedSubspace<F> out{m, n, {}};
  const auto& wb = WeightBlocks::get(m, n);
  std::vector<const BrauerDiagram*> diagrams;
  auto& reg = DiagramRegistry::get();
  std::vector<std::uint32_t> ids;
  for (int s = 1; s < n; ++s)
    for (int t = s + 1; t <= n; ++t) ids.push_back(reg.intern(e_st(s, t, n)));
  for (auto id : ids) diagrams.push_back(&reg.diagram(n, id));

  std::vector<Subspace<F>> per_block(wb.weights.size());
  par::for_each(wb.weights.size(), [&](std::size_t b) {
    const int dim = static_cast<int>(wb.codes[b].size());
    Mat<F> stacked(f, dim * static_cast<int>(diagrams.size()), dim);
    for (size_t k = 0; k < diagrams.size(); ++k) {
      Mat<F> M = diagram_block_matrix(f, wb, *diagrams[k], static_cast<int>(b));
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) stacked.at(static_cast<int>(k) * dim + i, j) = M.at(i, j);
    }
    per_block[b] = kernel(f, std::move(stacked));
  });
  for (size_t b = 0; b < wb.weights.size(); ++b)
    if (per_block[b].dim() > 0) out.parts.emplace(wb.weights[b], std::move(per_block[b]));
  return out;
}

// Span of z_{g,lambda} . B_n inside the lambda weight block.
template <class F>
Subspace<F> z_span(const F& f, int m, int n, int g, const Partition& lam) {
  const auto& wb = WeightBlocks::get(m, n);
  int blk = wb.block_of(weight_of_partition(lam, m));
  if (blk < 0) return Subspace<F>{0, Mat<F>(), {}};
  auto z = z_vector(f, m, n, g, lam);
  auto& reg = DiagramRegistry::get();
  const auto& ids = reg.all(n);

  std::vector<std::vector<typename F::Elem>> rows(ids.size());
  par::for_each(ids.size(), [&](std::size_t k) {
    auto img = act_diagram(f, z, reg.diagram(n, ids[k]));
    if (!img.is_zero()) rows[k] = to_block_row(f, img, wb, blk);
  });
  std::vector<std::vector<typename F::Elem>> nonzero;
  for (auto& r : rows)
    if (!r.empty()) nonzero.push_back(std::move(r));
  return span(f, nonzero, static_cast<int>(wb.codes[blk].size()));
}

// Rank of the Theta_f pairing between the harmonic space and the ideal image:
// the bilinear form couples the mu block with the -mu block only.
template <class F>
long long theta_pairing_rank(const F& f, const BlockedSubspace<F>& ht,
                             const BlockedSubspace<F>& image) {
  const auto& wb = WeightBlocks::get(ht.m, ht.n);
  long long total = 0;
  for (const auto& [w, hs] : ht.parts) {
    Weight neg(w.size());
    for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    auto it = image.parts.find(neg);
    if (it == image.parts.end()) continue;
    int hb = wb.block_of(w);
    int ib = wb.block_of(neg);
    auto pairing = [&](const std::vector<typename F::Elem>& x,
                       const std::vector<typename F::Elem>& y) {
      return bilinear(f, from_block_row(f, x, wb, hb), from_block_row(f, y, wb, ib));
    };
    total += gram_rank(f, hs, it->second, pairing);
  }
  return total;
}

// Rank of the family of induced diagram endomorphisms of V^(x)n / W, where W
// is a Brauer-stable blocked subspace (the image of an ideal). Flattens the
// induced block matrices of every diagram and takes the rank of the family.
template <class F>
long long brauer_image_rank_on_quotient(const F& f, int m, int n, const BlockedSubspace<F>& W) {
  const auto& wb = WeightBlocks::get(m, n);
  const int nblocks = static_cast<int>(wb.weights.size());

  // complement coordinates per block
  std::vector<std::vector<int>> complement(nblocks);
  std::vector<const Subspace<F>*> wpart(nblocks, nullptr);
  long long qtotal = 0;
  for (int b = 0; b < nblocks; ++b) {
    const int dim = static_cast<int>(wb.codes[b].size());
    auto it = W.parts.find(wb.weights[b]);
    std::vector<char> piv(dim, 0);
    if (it != W.parts.end()) {
      wpart[b] = &it->second;
      for (int p : it->second.pivots) piv[p] = 1;
    }
    for (int c = 0; c < dim; ++c)
      if (!piv[c]) complement[b].push_back(c);
    qtotal += static_cast<long long>(complement[b].size()) * complement[b].size();
  }
  if (qtotal == 0) return 0;

  auto& reg = DiagramRegistry::get();
  const auto& ids = reg.all(n);
  std::vector<std::vector<typename F::Elem>> rows(ids.size());
  par::for_each(ids.size(), [&](std::size_t k) {
    const auto& d = reg.diagram(n, ids[k]);
    std::vector<typename F::Elem> flat;
    flat.reserve(qtotal);
    for (int b = 0; b < nblocks; ++b) {
      const auto& comp = complement[b];
      if (comp.empty()) continue;
      for (int c : comp) {
        // project-after-act on the complement representative e_c
        auto img = act_diagram(f, TensorVector<typename F::Elem>::basis(m, n, wb.codes[b][c]), d);
        auto row = to_block_row(f, img, wb, b);
        if (wpart[b] != nullptr) row = wpart[b]->reduce(f, row);
        for (int t : comp) flat.push_back(row[t]);
      }
    }
    rows[k] = std::move(flat);
  });
  Mat<F> M(f, static_cast<int>(rows.size()), static_cast<int>(qtotal));
  for (size_t i = 0; i < rows.size(); ++i) M.set_row(static_cast<int>(i), rows[i]);
  return rank_in_place(f, M);
}

// Size of the commutant unknown vector for the quotient by W: the sum of the
// squared quotient block dimensions. Used to charge the solve against the
// work budget before committing to it.
template <class F>
long long commutant_unknowns(const F&, int m, int n, const BlockedSubspace<F>& W) {
  const auto& wb = WeightBlocks::get(m, n);
  long long total = 0;
  for (size_t b = 0; b < wb.weights.size(); ++b) {
    long long d = static_cast<long long>(wb.codes[b].size()) - W.block_dim(wb.weights[b]);
    total += d * d;
  }
  return total;
}

// Dimension of End over the Brauer algebra of the quotient V^(x)n / W:
// endomorphisms commuting with every induced generator action. These do not
// preserve weight blocks, so the system is assembled on the full quotient;
// callers should gate on its size.
template <class F>
long long brauer_commutant_dimension(const F& f, int m, int n, const BlockedSubspace<F>& W) {
  const auto& wb = WeightBlocks::get(m, n);
  const int nblocks = static_cast<int>(wb.weights.size());

  // global complement coordinates (block, inner index)
  std::vector<std::pair<int, int>> coords;
  std::vector<const Subspace<F>*> wpart(nblocks, nullptr);
  for (int b = 0; b < nblocks; ++b) {
    const int dim = static_cast<int>(wb.codes[b].size());
    auto it = W.parts.find(wb.weights[b]);
    std::vector<char> piv(dim, 0);
    if (it != W.parts.end()) {
      wpart[b] = &it->second;
      for (int p : it->second.pivots) piv[p] = 1;
    }
    for (int c = 0; c < dim; ++c)
      if (!piv[c]) coords.emplace_back(b, c);
  }
  const int q = static_cast<int>(coords.size());
  if (q == 0) return 0;

  // induced matrices of the generators on the quotient
  std::vector<BrauerDiagram> gens;
  for (int i = 1; i < n; ++i) {
    gens.push_back(brauer_s(i, n));
    gens.push_back(brauer_e(i, n));
  }
  std::vector<Mat<F>> G;
  for (const auto& d : gens) {
    Mat<F> M(f, q, q);
    for (int c = 0; c < q; ++c) {
      auto [b, inner] = coords[c];
      auto img = act_diagram(f, TensorVector<typename F::Elem>::basis(m, n, wb.codes[b][inner]), d);
      // project-after-act; the action preserves blocks, so the induced
      // matrix is block diagonal and other blocks contribute zeros
      auto row = to_block_row(f, img, wb, b);
      if (wpart[b] != nullptr) row = wpart[b]->reduce(f, row);
      for (int t = 0; t < q; ++t) {
        auto [tb, tinner] = coords[t];
        if (tb == b) M.at(t, c) = row[tinner];
      }
    }
    G.push_back(std::move(M));
  }

  // unknown X (q x q), constraints X G - G X = 0 per generator
  Mat<F> sys(f, static_cast<int>(G.size()) * q * q, q * q);
  int row = 0;
  for (const auto& M : G)
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        for (int s = 0; s < q; ++s) {
          sys.at(row, a * q + s) += M.at(s, b);
          sys.at(row, s * q + b) -= M.at(a, s);
        }
        ++row;
      }
  return q * static_cast<long long>(q) - rref_in_place(f, sys).rank;
}

// ---------------------------------------------------------------------------
// Character-side predictions.

// sum over pi_f of (up-down multiplicity) x dim nabla
long long ideal_dimension_prediction(int m, int n, int fidx);
// sum of squared multiplicities over the quotient support pi_0 \ pi_f
long long commutant_prediction(int m, int n, int fidx);

// ---------------------------------------------------------------------------
// Check results and suites.

struct CheckResult {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  std::string expected;
  std::string expected_provenance;  // "paper" | "trivial" | "derived"
  std::string computed;
  bool pass = false;
  long long millis = 0;
  bool cached = false;
};

struct ExperimentSpec {
  std::string suite;
  int m = 1;
  int n = 2;
  std::optional<int> f;
  std::vector<FieldSpec> fields = default_check_fields();
  long long budget = 5000;
};

std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const ExperimentSpec& spec);

}  // namespace blab
