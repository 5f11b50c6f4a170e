#ifndef DEFCALC_MATRIX_HPP
#define DEFCALC_MATRIX_HPP

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <nlohmann/json.hpp>

#include "defcalc/rat_func.hpp"

namespace Eigen {

template <>
struct NumTraits<defcalc::Rational> : GenericNumTraits<defcalc::Rational> {
  using Real = defcalc::Rational;
  using NonInteger = defcalc::Rational;
  using Nested = defcalc::Rational;
  using Literal = defcalc::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
};

template <>
struct NumTraits<defcalc::RatFunc> : GenericNumTraits<defcalc::RatFunc> {
  using Real = defcalc::RatFunc;
  using NonInteger = defcalc::RatFunc;
  using Nested = defcalc::RatFunc;
  using Literal = defcalc::RatFunc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 64,
    MulCost = 256
  };
};

}  // namespace Eigen

namespace defcalc {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = MatrixX<Rational>;
using RatFuncMatrix = MatrixX<RatFunc>;

template <class Scalar>
bool is_zero(const MatrixX<Scalar>& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (!is_zero(m(r, c))) return false;
    }
  }
  return true;
}

template <class Scalar>
bool equal(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero<Scalar>(a - b);
}

/// Matrix product that skips structural zeros; the operators built here are
/// very sparse and exact scalar multiplication is expensive.
template <class Scalar>
MatrixX<Scalar> product(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  eigen_assert(a.cols() == b.rows());
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      const Scalar& bkj = b(k, j);
      if (is_zero(bkj)) continue;
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const Scalar& aik = a(i, k);
        if (is_zero(aik)) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

template <class Scalar>
MatrixX<Scalar> commutator(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  return product(a, b) - product(b, a);
}

template <class Scalar>
MatrixX<Scalar> kron(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          if (!is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

/// E_rc on an n-dimensional space (0-based indices).
inline RationalMatrix elementary(Eigen::Index n, Eigen::Index r, Eigen::Index c) {
  RationalMatrix e = RationalMatrix::Zero(n, n);
  e(r, c) = Rational(1);
  return e;
}

using SparseRationalMatrix = Eigen::SparseMatrix<Rational>;

/// Compressed copy holding only the nonzero entries.
inline SparseRationalMatrix sparse(const RationalMatrix& m) {
  std::vector<Eigen::Triplet<Rational>> entries;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) entries.emplace_back(r, c, m(r, c));
    }
  }
  SparseRationalMatrix out(m.rows(), m.cols());
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

/// Exact test; entries that cancelled to zero may still be stored.
inline bool is_zero(const SparseRationalMatrix& m) {
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (SparseRationalMatrix::InnerIterator it(m, k); it; ++it) {
      if (!it.value().is_zero()) return false;
    }
  }
  return true;
}

inline SparseRationalMatrix commutator(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  return SparseRationalMatrix(a * b) - SparseRationalMatrix(b * a);
}

inline RatFuncMatrix lift(const RationalMatrix& m) {
  return m.unaryExpr([](const Rational& x) { return RatFunc(x); });
}

/// out += f * m, touching only the nonzero entries of m.
inline void accumulate(RatFuncMatrix& out, const RatFunc& f, const RationalMatrix& m) {
  if (f.is_zero()) return;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) out(r, c) += f * RatFunc(m(r, c));
    }
  }
}

inline RatFuncMatrix scaled(const RatFunc& f, const RationalMatrix& m) {
  RatFuncMatrix out = RatFuncMatrix::Zero(m.rows(), m.cols());
  accumulate(out, f, m);
  return out;
}

inline RatFuncMatrix scaled(const RatFunc& f, const RatFuncMatrix& m) {
  if (f.is_zero()) return RatFuncMatrix::Zero(m.rows(), m.cols());
  return m.unaryExpr([&](const RatFunc& x) { return x.is_zero() ? x : f * x; });
}

inline RationalMatrix evaluate(const RatFuncMatrix& m, const Assignment& point) {
  return m.unaryExpr([&](const RatFunc& x) { return x.is_zero() ? Rational(0) : evaluate(x, point); });
}

template <class Scalar>
nlohmann::ordered_json to_json(const MatrixX<Scalar>& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace defcalc

#endif  // DEFCALC_MATRIX_HPP
