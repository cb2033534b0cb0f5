// The quantized layer over Z[q,q^-1]: the R-matrices beta'/gamma' acting on
// V (x) V, their Kronecker placements on V^(x)n, the eight defining relation
// families of the specialized BMW algebra, the Hecke matrix beta-hat on the
// upper subspace, and the quantized vectors alpha_q and Z_{g,lambda} with
// their specialization at q = 1 onto the Brauer side.
//
// Products are evaluated in right-action order: a word x y acts as "x first",
// so its operator matrix is mat(y) * mat(x). At q = 1, T_j and E_j then
// specialize to the actions of -s_j and e_j exactly.
#pragma once

#include <string>
#include <vector>

#include "blab/partitions.hpp"
#include "blab/scalars.hpp"
#include "blab/tensor.hpp"

namespace blab {

// rho = (m, m-1, ..., 1, -1, ..., -m), eps_i = sign(rho_i).
struct RhoData {
  std::vector<int> rho;  // length 2m
  std::vector<int> eps;
  explicit RhoData(int m);
};

// Square matrix over Z[q,q^-1] with sparse rows.
struct LaurentMat {
  int size = 0;
  std::vector<std::map<int, Laurent>> rows;

  explicit LaurentMat(int n = 0) : size(n), rows(n) {}
  static LaurentMat identity(int n);

  void add(int r, int c, const Laurent& v);
  const Laurent* entry(int r, int c) const;

  LaurentMat& operator+=(const LaurentMat& o);
  friend LaurentMat operator*(const LaurentMat& a, const LaurentMat& b);  // plain matrix product
  LaurentMat scaled(const Laurent& c) const;
  friend bool operator==(const LaurentMat& a, const LaurentMat& b);

  // specialization entrywise at q = 1
  std::vector<std::vector<long>> specialize_q1() const;
};

// Operator matrix of the algebra word w1 w2 ... wk (applied left to right):
// mat(wk) * ... * mat(w1).
LaurentMat word_matrix(const std::vector<const LaurentMat*>& word);

// The 4m^2 x 4m^2 matrices on V (x) V.
LaurentMat beta_prime(int m);
LaurentMat gamma_prime(int m);
// The m^2 x m^2 Hecke matrix on the span of v_1..v_m tensored with itself.
LaurentMat beta_hat(int m);

// Kronecker placement on V^(x)n (dim is the per-slot alphabet size: 2m for
// the BMW action, m for the Hecke action).
LaurentMat place_pair(const LaurentMat& pair_matrix, int dim, int j, int n);

// phi_C(T_j) and phi_C(E_j) as (2m)^n matrices.
LaurentMat phi_C(char kind, int j, int n, int m);
// phi_A(T-hat_j) as an m^n matrix.
LaurentMat phi_A(int j, int n, int m);

struct RelationCheck {
  int relation = 0;          // 1..8
  std::string indices;
  bool pass = false;
  std::string witness;       // first differing entry when failing
};

// Evaluates all eight defining relation families at every valid index.
std::vector<RelationCheck> check_bmw_relations(int m, int n);

// Hecke sanity: quadratic and braid relations of beta-hat.
std::vector<RelationCheck> check_hecke_relations(int m, int n);

// alpha_q = sum_k q^{-rho_k} eps_k  v_k (x) v_{k'}.
TensorVector<Laurent> alpha_q(int m);

// Applies the pair matrix at tensor slots (j, j+1) of a Laurent vector whose
// entries range over 1..dim.
TensorVector<Laurent> apply_pair(const TensorVector<Laurent>& v, const LaurentMat& pair_matrix,
                                 int dim, int j);

// v . T_w (or T-hat_w) for w given by a reduced word acting on strands
// offset+1 .. offset+k.
TensorVector<Laurent> apply_T_word(const TensorVector<Laurent>& v, const std::vector<int>& word,
                                   int offset, const LaurentMat& pair_matrix, int dim);

// Z_{g,lambda} = alpha_q^(x)g (x) v_lambda T_{w_lambda} Y_{lambda'}.
TensorVector<Laurent> Z_q(int m, int n, int g, const Partition& lam);

// Coefficientwise specialization at q = 1 into exact rationals.
TensorVector<Rational> specialize_vector(const TensorVector<Laurent>& v);

// v_lambda T-hat_sigma = q^{l(sigma)} v_lambda for sigma in S_lambda, checked
// on the generators and a sample of random elements.
bool check_hecke_eigen(int m, const Partition& lam);

}  // namespace blab
