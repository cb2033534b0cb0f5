// Exact dense linear algebra over a field context F: reduced row echelon
// form with deterministic pivoting, kernels, spans, sums, intersections and
// Gram ranks. Subspaces are canonical: equal subspaces have identical
// row-reduced basis matrices.
#pragma once

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "blab/scalars.hpp"

namespace blab {

template <class F>
struct Mat {
  using E = typename F::Elem;
  int rows = 0, cols = 0;
  std::vector<E> a;

  Mat() = default;
  Mat(const F& f, int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}

  E& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const E& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  std::vector<E> row(int i) const {
    return std::vector<E>(a.begin() + static_cast<size_t>(i) * cols,
                          a.begin() + static_cast<size_t>(i + 1) * cols);
  }
  void set_row(int i, const std::vector<E>& v) {
    for (int j = 0; j < cols; ++j) at(i, j) = v[j];
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

struct RrefInfo {
  int rank = 0;
  std::vector<int> pivots;
};

// Generic Gauss-Jordan elimination. Pivot choice is deterministic: leftmost
// nonzero column, first candidate row.
template <class F>
RrefInfo rref_in_place(const F& f, Mat<F>& M) {
  RrefInfo info;
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (!f.is_zero(M.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
    auto inv = f.one() / M.at(r, c);
    for (int j = c; j < M.cols; ++j) M.at(r, j) *= inv;
    for (int i = 0; i < M.rows; ++i) {
      if (i == r || f.is_zero(M.at(i, c))) continue;
      auto t = M.at(i, c);
      for (int j = c; j < M.cols; ++j) M.at(i, j) -= t * M.at(r, j);
    }
    info.pivots.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

// Fraction-free (Bareiss) forward elimination over Q to contain coefficient
// growth, followed by a rational back-substitution pass into reduced form.
inline RrefInfo rref_in_place(const Rationals& f, Mat<Rationals>& M) {
  const int rows = M.rows, cols = M.cols;
  std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M.at(i, j).den().get_mpz_t());
    for (int j = 0; j < cols; ++j) z[i][j] = M.at(i, j).num() * (l / M.at(i, j).den());
  }

  RrefInfo info;
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (z[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap(z[piv], z[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        // the one-step division is exact (entries stay minors of the input)
        mpz_class rem;
        mpz_tdiv_qr(z[i][j].get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("rref: fraction-free step not exact");
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    info.pivots.push_back(c);
    ++r;
  }
  info.rank = r;

  // Back-substitute in rational arithmetic and normalize pivots to 1.
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M.at(i, j) = Rational(mpq_class(z[i][j]));
  for (int k = info.rank - 1; k >= 0; --k) {
    int c = info.pivots[k];
    Rational inv = M.at(k, c).inv();
    for (int j = c; j < cols; ++j) M.at(k, j) *= inv;
    for (int i = 0; i < k; ++i) {
      Rational t = M.at(i, c);
      if (t.is_zero()) continue;
      for (int j = c; j < cols; ++j) M.at(i, j) -= t * M.at(k, j);
    }
  }
  return info;
}

// Rank only: forward elimination without the reduction pass.
template <class F>
int rank_in_place(const F& f, Mat<F>& M) {
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (!f.is_zero(M.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
    auto inv = f.one() / M.at(r, c);
    for (int i = r + 1; i < M.rows; ++i) {
      if (f.is_zero(M.at(i, c))) continue;
      auto t = M.at(i, c) * inv;
      for (int j = c; j < M.cols; ++j) M.at(i, j) -= t * M.at(r, j);
    }
    ++r;
  }
  return r;
}

inline int rank_in_place(const Rationals& f, Mat<Rationals>& M) {
  const int rows = M.rows, cols = M.cols;
  std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M.at(i, j).den().get_mpz_t());
    for (int j = 0; j < cols; ++j) z[i][j] = M.at(i, j).num() * (l / M.at(i, j).den());
  }
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (z[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap(z[piv], z[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        mpz_class rem;
        mpz_tdiv_qr(z[i][j].get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("rank: fraction-free step not exact");
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    ++r;
  }
  return r;
}

// Row-reduced canonical basis of a subspace of F^ambient.
template <class F>
struct Subspace {
  using E = typename F::Elem;
  int ambient = 0;
  Mat<F> basis;               // dim x ambient, reduced echelon form
  std::vector<int> pivots;

  int dim() const { return basis.rows; }

  // Residue of v after reduction by the basis rows; zero iff v is contained.
  std::vector<E> reduce(const F& f, std::vector<E> v) const {
    for (int r = 0; r < basis.rows; ++r) {
      const E& c = v[pivots[r]];
      if (f.is_zero(c)) continue;
      E t = c;
      for (int j = 0; j < ambient; ++j) v[j] -= t * basis.at(r, j);
    }
    return v;
  }
  bool contains(const F& f, const std::vector<E>& v) const {
    for (const E& x : reduce(f, v))
      if (!f.is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

template <class F>
Subspace<F> span(const F& f, const std::vector<std::vector<typename F::Elem>>& vectors, int ambient) {
  Mat<F> M(f, static_cast<int>(vectors.size()), ambient);
  for (size_t i = 0; i < vectors.size(); ++i) M.set_row(static_cast<int>(i), vectors[i]);
  RrefInfo info = rref_in_place(f, M);
  Subspace<F> s;
  s.ambient = ambient;
  s.pivots = info.pivots;
  s.basis = Mat<F>(f, info.rank, ambient);
  for (int i = 0; i < info.rank; ++i)
    for (int j = 0; j < ambient; ++j) s.basis.at(i, j) = M.at(i, j);
  return s;
}

// Right null space {x : M x = 0} as a canonical subspace of F^cols.
template <class F>
Subspace<F> kernel(const F& f, Mat<F> M) {
  RrefInfo info = rref_in_place(f, M);
  std::vector<char> is_pivot(M.cols, 0);
  for (int c : info.pivots) is_pivot[c] = 1;
  std::vector<std::vector<typename F::Elem>> vecs;
  for (int c = 0; c < M.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<typename F::Elem> v(M.cols, f.zero());
    v[c] = f.one();
    for (int r = 0; r < info.rank; ++r) v[info.pivots[r]] = f.zero() - M.at(r, c);
    vecs.push_back(std::move(v));
  }
  return span(f, vecs, M.cols);
}

template <class F>
Subspace<F> sum(const F& f, const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<std::vector<typename F::Elem>> vecs;
  for (int i = 0; i < a.dim(); ++i) vecs.push_back(a.basis.row(i));
  for (int i = 0; i < b.dim(); ++i) vecs.push_back(b.basis.row(i));
  return span(f, vecs, a.ambient);
}

template <class F>
Subspace<F> intersect(const F& f, const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("intersect: ambient mismatch");
  const int ra = a.dim(), rb = b.dim();
  // Left null space of the stacked basis rows: u.A + w.B = 0.
  Mat<F> T(f, a.ambient, ra + rb);
  for (int k = 0; k < ra; ++k)
    for (int j = 0; j < a.ambient; ++j) T.at(j, k) = a.basis.at(k, j);
  for (int k = 0; k < rb; ++k)
    for (int j = 0; j < a.ambient; ++j) T.at(j, ra + k) = b.basis.at(k, j);
  Subspace<F> coeffs = kernel(f, std::move(T));

  std::vector<std::vector<typename F::Elem>> vecs;
  for (int i = 0; i < coeffs.dim(); ++i) {
    std::vector<typename F::Elem> v(a.ambient, f.zero());
    for (int k = 0; k < ra; ++k) {
      const auto& c = coeffs.basis.at(i, k);
      if (f.is_zero(c)) continue;
      for (int j = 0; j < a.ambient; ++j) v[j] += c * a.basis.at(k, j);
    }
    vecs.push_back(std::move(v));
  }
  return span(f, vecs, a.ambient);
}

// Rank of the pairing matrix [pairing(a_i, b_j)] over the two bases.
template <class F, class Pairing>
int gram_rank(const F& f, const Subspace<F>& a, const Subspace<F>& b, Pairing&& pairing) {
  Mat<F> G(f, a.dim(), b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) G.at(i, j) = pairing(a.basis.row(i), b.basis.row(j));
  return rank_in_place(f, G);
}

}  // namespace blab
