#include "blab/bmw.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "blab/perm.hpp"

namespace blab {

RhoData::RhoData(int m) {
  rho.resize(2 * m);
  eps.resize(2 * m);
  for (int i = 0; i < m; ++i) {
    rho[i] = m - i;
    rho[2 * m - 1 - i] = -(m - i);
  }
  for (int i = 0; i < 2 * m; ++i) eps[i] = rho[i] > 0 ? 1 : -1;
}

LaurentMat LaurentMat::identity(int n) {
  LaurentMat I(n);
  for (int i = 0; i < n; ++i) I.rows[i][i] = Laurent(1);
  return I;
}

void LaurentMat::add(int r, int c, const Laurent& v) {
  if (v.is_zero()) return;
  auto& row = rows[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

const Laurent* LaurentMat::entry(int r, int c) const {
  auto it = rows[r].find(c);
  return it == rows[r].end() ? nullptr : &it->second;
}

LaurentMat& LaurentMat::operator+=(const LaurentMat& o) {
  if (size != o.size) throw std::invalid_argument("LaurentMat: size mismatch");
  for (int r = 0; r < size; ++r)
    for (const auto& [c, v] : o.rows[r]) add(r, c, v);
  return *this;
}

LaurentMat operator*(const LaurentMat& a, const LaurentMat& b) {
  if (a.size != b.size) throw std::invalid_argument("LaurentMat: size mismatch");
  LaurentMat out(a.size);
  for (int r = 0; r < a.size; ++r)
    for (const auto& [k, av] : a.rows[r])
      for (const auto& [c, bv] : b.rows[k]) out.add(r, c, av * bv);
  return out;
}

LaurentMat LaurentMat::scaled(const Laurent& c) const {
  LaurentMat out(size);
  if (c.is_zero()) return out;
  for (int r = 0; r < size; ++r)
    for (const auto& [col, v] : rows[r]) out.rows[r].emplace(col, v * c);
  return out;
}

bool operator==(const LaurentMat& a, const LaurentMat& b) {
  return a.size == b.size && a.rows == b.rows;
}

std::vector<std::vector<long>> LaurentMat::specialize_q1() const {
  std::vector<std::vector<long>> out(size, std::vector<long>(size, 0));
  for (int r = 0; r < size; ++r)
    for (const auto& [c, v] : rows[r]) out[r][c] = v.specialize_q1().get_si();
  return out;
}

LaurentMat word_matrix(const std::vector<const LaurentMat*>& word) {
  if (word.empty()) throw std::invalid_argument("word_matrix: empty word");
  LaurentMat acc = *word.front();
  for (size_t i = 1; i < word.size(); ++i) acc = *word[i] * acc;
  return acc;
}

namespace {

inline int pair_index(int a, int b, int dim) { return (a - 1) * dim + (b - 1); }

}  // namespace

// beta' = sum_i (q E_ii (x) E_ii + q^-1 E_{i,i'} (x) E_{i',i})
//       + sum_{i != j, j'} E_{i,j} (x) E_{j,i}
//       + (q - q^-1) sum_{i<j} (E_ii (x) E_jj
//                               - q^{rho_j - rho_i} eps_i eps_j E_{i,j'} (x) E_{i',j})
LaurentMat beta_prime(int m) {
  const int d = 2 * m;
  RhoData rd(m);
  LaurentMat B(d * d);
  auto dual = [&](int i) { return 2 * m + 1 - i; };
  // (X (x) Y)(v_a (x) v_b) = X v_a (x) Y v_b, with E_{x,y} v_a = delta_{a,y} v_x.
  // A summand E_{x,y} (x) E_{u,w} therefore contributes at matrix position
  // row = (x,u), column = (y,w).
  for (int i = 1; i <= d; ++i) {
    B.add(pair_index(i, i, d), pair_index(i, i, d), Laurent::q_power(1));
    B.add(pair_index(i, dual(i), d), pair_index(dual(i), i, d), Laurent::q_power(-1));
  }
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      if (j == i || j == dual(i)) continue;
      B.add(pair_index(i, j, d), pair_index(j, i, d), Laurent(1));
    }
  Laurent coeff = Laurent::q_power(1) - Laurent::q_power(-1);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      B.add(pair_index(i, j, d), pair_index(i, j, d), coeff);
      Laurent c = Laurent::q_power(rd.rho[j - 1] - rd.rho[i - 1],
                                   -static_cast<long>(rd.eps[i - 1] * rd.eps[j - 1]));
      B.add(pair_index(i, dual(i), d), pair_index(dual(j), j, d), coeff * c);
    }
  return B;
}

// gamma' = sum_{i,j} q^{rho_j - rho_i} eps_i eps_j E_{i,j'} (x) E_{i',j}
LaurentMat gamma_prime(int m) {
  const int d = 2 * m;
  RhoData rd(m);
  LaurentMat G(d * d);
  auto dual = [&](int i) { return 2 * m + 1 - i; };
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      G.add(pair_index(i, dual(i), d), pair_index(dual(j), j, d),
            Laurent::q_power(rd.rho[j - 1] - rd.rho[i - 1], rd.eps[i - 1] * rd.eps[j - 1]));
  return G;
}

// beta-hat = q sum_i E_ii (x) E_ii + sum_{i != j} E_{i,j} (x) E_{j,i}
//          + (q - q^-1) sum_{i<j} E_ii (x) E_jj,   indices up to m
LaurentMat beta_hat(int m) {
  LaurentMat B(m * m);
  for (int i = 1; i <= m; ++i)
    B.add(pair_index(i, i, m), pair_index(i, i, m), Laurent::q_power(1));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      B.add(pair_index(i, j, m), pair_index(j, i, m), Laurent(1));
    }
  Laurent coeff = Laurent::q_power(1) - Laurent::q_power(-1);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) B.add(pair_index(i, j, m), pair_index(i, j, m), coeff);
  return B;
}

LaurentMat place_pair(const LaurentMat& pair_matrix, int dim, int j, int n) {
  if (j < 1 || j >= n) throw std::out_of_range("place_pair: slot");
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= dim;
  LaurentMat out(static_cast<int>(total));

  // Tuples are linearized in lexicographic order, first slot most significant.
  auto linear = [&](const std::vector<int>& t) {
    long long r = 0;
    for (int s = 0; s < n; ++s) r = r * dim + (t[s] - 1);
    return r;
  };

  std::vector<int> idx(n, 1);
  for (;;) {
    long long col = linear(idx);
    int src = pair_index(idx[j - 1], idx[j], dim);
    for (int pr = 0; pr < pair_matrix.size; ++pr) {
      const Laurent* v = pair_matrix.entry(pr, src);
      if (v == nullptr) continue;
      std::vector<int> t = idx;
      t[j - 1] = pr / dim + 1;
      t[j] = pr % dim + 1;
      out.add(static_cast<int>(linear(t)), static_cast<int>(col), *v);
    }
    int s = n - 1;
    while (s >= 0 && idx[s] == dim) idx[s--] = 1;
    if (s < 0) break;
    idx[s]++;
  }
  return out;
}

LaurentMat phi_C(char kind, int j, int n, int m) {
  return place_pair(kind == 'T' ? beta_prime(m) : gamma_prime(m), 2 * m, j, n);
}

LaurentMat phi_A(int j, int n, int m) { return place_pair(beta_hat(m), m, j, n); }

namespace {

bool mats_equal(const LaurentMat& a, const LaurentMat& b, std::string* witness) {
  if (a == b) return true;
  if (witness != nullptr) {
    for (int r = 0; r < a.size; ++r)
      for (int c = 0; c < a.size; ++c) {
        const Laurent* x = a.entry(r, c);
        const Laurent* y = b.entry(r, c);
        Laurent xv = x ? *x : Laurent();
        Laurent yv = y ? *y : Laurent();
        if (!(xv == yv)) {
          *witness = "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + xv.str() +
                     " vs " + yv.str();
          return false;
        }
      }
  }
  return false;
}

}  // namespace

std::vector<RelationCheck> check_bmw_relations(int m, int n) {
  std::vector<RelationCheck> out;
  std::vector<LaurentMat> T, E;
  for (int i = 1; i < n; ++i) {
    T.push_back(phi_C('T', i, n, m));
    E.push_back(phi_C('E', i, n, m));
  }
  LaurentMat I = LaurentMat::identity(T.front().size);
  Laurent qq = Laurent::q_power(1) - Laurent::q_power(-1);

  auto emit = [&](int rel, std::string idx, const LaurentMat& lhs, const LaurentMat& rhs) {
    RelationCheck rc;
    rc.relation = rel;
    rc.indices = std::move(idx);
    rc.pass = mats_equal(lhs, rhs, &rc.witness);
    out.push_back(std::move(rc));
  };

  for (int i = 0; i < n - 1; ++i) {
    std::string si = "i=" + std::to_string(i + 1);
    // (1) T_i - T_i^{-1} = (q - q^-1)(1 - E_i): checked as the two product
    // identities it is equivalent to, namely that X = T_i - (q-q^-1)(1-E_i)
    // is a two-sided inverse of T_i.
    LaurentMat corr = I;                       // 1 - E_i
    corr += E[i].scaled(Laurent(-1));
    LaurentMat X = T[i];
    X += corr.scaled(Laurent() - qq);          // T_i - (q-q^-1)(1-E_i)
    emit(1, si + " (X T = 1)", word_matrix({&X, &T[i]}), I);
    emit(1, si + " (T X = 1)", word_matrix({&T[i], &X}), I);

    // (2) E_i^2 = (1 - sum_{a=-m}^{m} q^{2a}) E_i
    Laurent c2 = Laurent(1);
    for (int a = -m; a <= m; ++a) c2 -= Laurent::q_power(2 * a);
    emit(2, si, word_matrix({&E[i], &E[i]}), E[i].scaled(c2));

    // (7) E_i T_i = T_i E_i = -q^{-2m-1} E_i
    Laurent c7 = Laurent::q_power(-2 * m - 1, -1);
    emit(7, si + " (ET)", word_matrix({&E[i], &T[i]}), E[i].scaled(c7));
    emit(7, si + " (TE)", word_matrix({&T[i], &E[i]}), E[i].scaled(c7));
  }

  for (int i = 0; i + 1 < n - 1; ++i) {
    std::string si = "i=" + std::to_string(i + 1);
    // (3) braid relation
    emit(3, si, word_matrix({&T[i], &T[i + 1], &T[i]}),
         word_matrix({&T[i + 1], &T[i], &T[i + 1]}));
    // (5) E_i E_{i+1} E_i = E_i and mirrored
    emit(5, si + " (EE'E)", word_matrix({&E[i], &E[i + 1], &E[i]}), E[i]);
    emit(5, si + " (E'EE')", word_matrix({&E[i + 1], &E[i], &E[i + 1]}), E[i + 1]);
    // (6) T_i T_{i+1} E_i = E_{i+1} E_i and mirrored
    emit(6, si + " (TT'E)", word_matrix({&T[i], &T[i + 1], &E[i]}),
         word_matrix({&E[i + 1], &E[i]}));
    emit(6, si + " (T'TE')", word_matrix({&T[i + 1], &T[i], &E[i + 1]}),
         word_matrix({&E[i], &E[i + 1]}));
    // (8) E_i T_{i+1} E_i = -q^{2m+1} E_i and mirrored
    Laurent c8 = Laurent::q_power(2 * m + 1, -1);
    emit(8, si + " (ETE)", word_matrix({&E[i], &T[i + 1], &E[i]}), E[i].scaled(c8));
    emit(8, si + " (E'TE')", word_matrix({&E[i + 1], &T[i], &E[i + 1]}), E[i + 1].scaled(c8));
  }

  // (4) distant commutation of the T_j
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 2; j < n - 1; ++j)
      emit(4, "i=" + std::to_string(i + 1) + ",j=" + std::to_string(j + 1),
           word_matrix({&T[i], &T[j]}), word_matrix({&T[j], &T[i]}));

  return out;
}

std::vector<RelationCheck> check_hecke_relations(int m, int n) {
  std::vector<RelationCheck> out;
  std::vector<LaurentMat> T;
  for (int i = 1; i < n; ++i) T.push_back(phi_A(i, n, m));
  LaurentMat I = LaurentMat::identity(T.front().size);
  Laurent qq = Laurent::q_power(1) - Laurent::q_power(-1);

  auto emit = [&](int rel, std::string idx, const LaurentMat& lhs, const LaurentMat& rhs) {
    RelationCheck rc;
    rc.relation = rel;
    rc.indices = std::move(idx);
    rc.pass = mats_equal(lhs, rhs, &rc.witness);
    out.push_back(std::move(rc));
  };

  for (int i = 0; i < n - 1; ++i) {
    // (T - q)(T + q^-1) = 0  <=>  T^2 = (q - q^-1) T + 1
    LaurentMat rhs = T[i].scaled(qq);
    rhs += I;
    emit(1, "i=" + std::to_string(i + 1), word_matrix({&T[i], &T[i]}), rhs);
  }
  for (int i = 0; i + 1 < n - 1; ++i)
    emit(2, "i=" + std::to_string(i + 1), word_matrix({&T[i], &T[i + 1], &T[i]}),
         word_matrix({&T[i + 1], &T[i], &T[i + 1]}));
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 2; j < n - 1; ++j)
      emit(3, "i=" + std::to_string(i + 1) + ",j=" + std::to_string(j + 1),
           word_matrix({&T[i], &T[j]}), word_matrix({&T[j], &T[i]}));
  return out;
}

TensorVector<Laurent> alpha_q(int m) {
  TensorVector<Laurent> v(m, 2);
  RhoData rd(m);
  for (int k = 1; k <= 2 * m; ++k)
    v.add_term(code_of({k, 2 * m + 1 - k}), Laurent::q_power(-rd.rho[k - 1], rd.eps[k - 1]));
  return v;
}

TensorVector<Laurent> apply_pair(const TensorVector<Laurent>& v, const LaurentMat& pair_matrix,
                                 int dim, int j) {
  if (j < 1 || j >= v.n) throw std::out_of_range("apply_pair: slot");
  TensorVector<Laurent> out(v.m, v.n);
  for (const auto& [code, coeff] : v.c) {
    int a = slot_get(code, j - 1), b = slot_get(code, j);
    int src = pair_index(a, b, dim);
    for (int pr = 0; pr < pair_matrix.size; ++pr) {
      const Laurent* x = pair_matrix.entry(pr, src);
      if (x == nullptr) continue;
      Code t = slot_set(slot_set(code, j - 1, pr / dim + 1), j, pr % dim + 1);
      out.add_term(t, *x * coeff);
    }
  }
  return out;
}

TensorVector<Laurent> apply_T_word(const TensorVector<Laurent>& v, const std::vector<int>& word,
                                   int offset, const LaurentMat& pair_matrix, int dim) {
  TensorVector<Laurent> out = v;
  for (int j : word) out = apply_pair(out, pair_matrix, dim, offset + j);
  return out;
}

TensorVector<Laurent> Z_q(int m, int n, int g, const Partition& lam) {
  if (partition_size(lam) != n - 2 * g || g < 0 || 2 * g > n)
    throw std::invalid_argument("Z_q: |lambda| != n - 2g");
  if (static_cast<int>(lam.size()) > m) throw std::invalid_argument("Z_q: too many parts");

  LaurentRing lr;
  TensorVector<Laurent> base(m, 0);
  base.add_term(0, Laurent(1));
  auto aq = alpha_q(m);
  for (int i = 0; i < g; ++i) base = tensor_product(base, aq);
  if (n > 2 * g) base = tensor_product(base, v_lambda(lr, m, lam));

  const int k = n - 2 * g;
  LaurentMat bp = beta_prime(m);
  auto r = apply_T_word(base, w_lambda(lam, k).reduced_word(), 2 * g, bp, 2 * m);

  // Y_{lambda'} = sum over S_{lambda'} of (-q)^{-l(w)} T_w
  TensorVector<Laurent> acc(m, n);
  for (const auto& w : young_subgroup(conjugate(lam), k)) {
    auto term = apply_T_word(r, w.reduced_word(), 2 * g, bp, 2 * m);
    acc += term.scaled(Laurent::q_power(-w.length(), w.length() % 2 == 0 ? 1 : -1));
  }
  return acc;
}

TensorVector<Rational> specialize_vector(const TensorVector<Laurent>& v) {
  TensorVector<Rational> out(v.m, v.n);
  for (const auto& [code, x] : v.c) out.add_term(code, Rational(mpq_class(x.specialize_q1())));
  return out;
}

bool check_hecke_eigen(int m, const Partition& lam) {
  const int n = partition_size(lam);
  if (static_cast<int>(lam.size()) > m)
    throw std::invalid_argument("check_hecke_eigen: too many parts");
  LaurentRing lr;
  auto v = v_lambda(lr, m, lam);
  LaurentMat bh = beta_hat(m);

  std::vector<Permutation> sample;
  int pos = 1;
  for (int part : lam) {
    for (int i = pos; i < pos + part - 1; ++i) sample.push_back(Permutation::transposition(n, i));
    pos += part;
  }
  auto group = young_subgroup(lam, n);
  std::uniform_int_distribution<size_t> d(0, group.size() - 1);
  std::mt19937_64 gen(12345);
  for (int t = 0; t < 20; ++t) sample.push_back(group[d(gen)]);

  for (const auto& w : sample) {
    auto img = apply_T_word(v, w.reduced_word(), 0, bh, m);
    if (!(img == v.scaled(Laurent::q_power(w.length())))) return false;
  }
  return true;
}

}  // namespace blab
