#include "blab/hyperalg.hpp"

#include <mutex>
#include <set>

namespace blab {

// The Chevalley generator matrices are derived rather than quoted; each one
// must lie in sp_2m for the form J and must annihilate the invariant alpha.
void ensure_chevalley_valid(int m) {
  static std::mutex mtx;
  static std::set<int> ok;
  std::lock_guard<std::mutex> lock(mtx);
  if (ok.count(m)) return;

  // J = sum_{i<=m} E_{i,i'} - sum_{i>m} E_{i,i'}
  std::vector<std::vector<int>> J(2 * m, std::vector<int>(2 * m, 0));
  for (int i = 1; i <= 2 * m; ++i) J[i - 1][2 * m - i] = i <= m ? 1 : -1;

  Rationals fq;
  for (bool raise : {true, false}) {
    for (int i = 1; i <= m; ++i) {
      auto X = chevalley_matrix(m, raise, i);
      for (int r = 0; r < 2 * m; ++r)
        for (int c = 0; c < 2 * m; ++c) {
          int acc = 0;  // (X^T J + J X)[r][c]
          for (int k = 0; k < 2 * m; ++k) acc += X[k][r] * J[k][c] + J[r][k] * X[k][c];
          if (acc != 0)
            throw std::logic_error("chevalley generator is not symplectic (configuration error)");
        }
      if (!act_divided(fq, alpha(fq, m), ChevalleyOp{raise, i, 1}).is_zero())
        throw std::logic_error("chevalley generator does not annihilate alpha (configuration error)");
    }
  }
  ok.insert(m);
}

}  // namespace blab
