#include <utility>

#include "hecke/spectra.hpp"

namespace hecke {

namespace {

struct Echelon {
  IntMatrix U;
  std::vector<std::size_t> pivots;
};

// Bareiss elimination; pivot = first column with a nonzero entry, row of largest |entry|.
Echelon bareiss(IntMatrix A) {
  Echelon E;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t best = A.rows;
    for (std::size_t i = r; i < A.rows; ++i)
      if (A(i, c) != 0 && (best == A.rows || abs(A(i, c)) > abs(A(best, c)))) best = i;
    if (best == A.rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(r, j), A(best, j));
    for (std::size_t i = r + 1; i < A.rows; ++i) {
      for (std::size_t j = c + 1; j < A.cols; ++j) A(i, j) = (A(r, c) * A(i, j) - A(i, c) * A(r, j)) / prev;
      A(i, c) = 0;
    }
    prev = A(r, c);
    E.pivots.push_back(c);
    ++r;
  }
  E.U = std::move(A);
  return E;
}

}  // namespace

std::size_t exact_rank(const IntMatrix& M) { return bareiss(M).pivots.size(); }

std::vector<std::vector<Rational>> exact_nullspace(const IntMatrix& M) {
  const Echelon E = bareiss(M);
  const std::size_t n = M.cols;
  std::vector<bool> is_pivot(n, false);
  for (auto c : E.pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = E.pivots.size(); i-- > 0;) {
      const std::size_t pc = E.pivots[i];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (E.U(i, j) != 0 && v[j] != 0) acc += Rational(E.U(i, j)) * v[j];
      v[pc] = -acc / Rational(E.U(i, pc));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> rational_nullspace(const std::vector<std::vector<Rational>>& rows,
                                                      std::size_t cols) {
  IntMatrix M(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BigInt l = 1;
    for (const auto& x : rows[i]) l = lcm(l, denominator(x));
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = numerator(rows[i][j]) * (l / denominator(rows[i][j]));
  }
  return exact_nullspace(M);
}

}  // namespace hecke
