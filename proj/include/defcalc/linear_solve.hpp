#ifndef DEFCALC_LINEAR_SOLVE_HPP
#define DEFCALC_LINEAR_SOLVE_HPP

#include <string_view>
#include <vector>

#include "defcalc/matrix.hpp"

namespace defcalc {

enum class SolveOutcome { unique, underdetermined, no_solution };

inline std::string_view to_string(SolveOutcome o) {
  switch (o) {
    case SolveOutcome::unique: return "unique";
    case SolveOutcome::underdetermined: return "underdetermined";
    case SolveOutcome::no_solution: return "no_solution";
  }
  return "?";
}

/// Solution set of A x = b: particular + span(nullspace).
template <class Scalar>
struct LinearSolution {
  SolveOutcome outcome = SolveOutcome::unique;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> nullspace;
};

/// Gauss-Jordan elimination over an exact field; free variables are set to 0
/// in the particular solution.
template <class Scalar>
LinearSolution<Scalar> solve_linear(MatrixX<Scalar> a, std::vector<Scalar> b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      std::swap(b[static_cast<std::size_t>(p)], b[static_cast<std::size_t>(r)]);
    }
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    b[static_cast<std::size_t>(r)] = b[static_cast<std::size_t>(r)] * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
      b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] - f * b[static_cast<std::size_t>(r)];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  LinearSolution<Scalar> out;
  for (Eigen::Index i = r; i < rows; ++i) {
    if (!is_zero(b[static_cast<std::size_t>(i)])) {
      out.outcome = SolveOutcome::no_solution;
      return out;
    }
  }
  out.particular.assign(static_cast<std::size_t>(cols), Scalar(0));
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) out.particular[static_cast<std::size_t>(pivot_cols[k])] = b[k];

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(cols), Scalar(0));
    v[static_cast<std::size_t>(f)] = Scalar(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      v[static_cast<std::size_t>(pivot_cols[k])] = -a(static_cast<Eigen::Index>(k), f);
    }
    out.nullspace.push_back(std::move(v));
  }
  out.outcome = out.nullspace.empty() ? SolveOutcome::unique : SolveOutcome::underdetermined;
  return out;
}

}  // namespace defcalc

#endif  // DEFCALC_LINEAR_SOLVE_HPP
