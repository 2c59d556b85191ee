#include "muntzlab/linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace muntzlab {

namespace {

// Dense row-major integer workspace for fraction-free elimination.
struct IntWork {
  std::vector<mpz_class> a;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;

  mpz_class& at(Eigen::Index i, Eigen::Index j) { return a[i * cols + j]; }
};

// Clears denominators row by row. Returns the product of the row multipliers,
// i.e. det(scaled) = det(original) * multiplier for square input.
mpz_class clear_denominators(const RatMatrix& m, const RatVector* rhs, IntWork& w) {
  const Eigen::Index extra = rhs != nullptr ? 1 : 0;
  w.rows = m.rows();
  w.cols = m.cols() + extra;
  w.a.assign(static_cast<size_t>(w.rows * w.cols), mpz_class(0));

  mpz_class multiplier(1);
  for (Eigen::Index i = 0; i < w.rows; ++i) {
    mpz_class row_lcm(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).den().get_mpz_t());
    }
    if (rhs != nullptr) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), (*rhs)(i).den().get_mpz_t());
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      w.at(i, j) = m(i, j).num() * (row_lcm / m(i, j).den());
    }
    if (rhs != nullptr) {
      w.at(i, m.cols()) = (*rhs)(i).num() * (row_lcm / (*rhs)(i).den());
    }
    multiplier *= row_lcm;
  }
  return multiplier;
}

void exact_divide(mpz_class& value, const mpz_class& divisor) {
#ifndef NDEBUG
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  assert(sgn(r) == 0 && "bareiss step division must be exact");
  value = std::move(q);
#else
  mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
#endif
}

// Fraction-free forward elimination over the first `n` pivot columns.
// Pivot rule: first nonzero entry in column order. Returns the row-swap sign,
// or 0 when some pivot column is entirely zero below the diagonal.
int bareiss_forward(IntWork& w, Eigen::Index n) {
  int sign = 1;
  mpz_class prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index r = k; r < w.rows; ++r) {
      if (sgn(w.at(r, k)) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) return 0;
    if (pivot_row != k) {
      for (Eigen::Index j = 0; j < w.cols; ++j) {
        std::swap(w.at(k, j), w.at(pivot_row, j));
      }
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < w.rows; ++i) {
      for (Eigen::Index j = k + 1; j < w.cols; ++j) {
        w.at(i, j) = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        exact_divide(w.at(i, j), prev);
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign;
}

}  // namespace

Rational bareiss_determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("bareiss_determinant: matrix must be square");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return Rational(1);

  IntWork w;
  const mpz_class multiplier = clear_denominators(m, nullptr, w);
  const int sign = bareiss_forward(w, n - 1);
  if (sign == 0) return Rational(0);
  mpz_class det_int = w.at(n - 1, n - 1);
  if (sign < 0) det_int = -det_int;
  return Rational(std::move(det_int), multiplier);
}

RatVector solve_exact(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("solve_exact: matrix must be square");
  }
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve_exact: right-hand side length mismatch");
  }
  const Eigen::Index n = a.rows();
  RatVector x(n);
  if (n == 0) return x;

  IntWork w;
  clear_denominators(a, &b, w);
  if (bareiss_forward(w, n) == 0) {
    throw std::domain_error("solve_exact: singular matrix");
  }

  // The eliminated rows are upper triangular with nonzero diagonal.
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Rational sum(w.at(i, n), 1);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      sum -= Rational(w.at(i, j), 1) * x(j);
    }
    x(i) = sum / Rational(w.at(i, i), 1);
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    Rational acc(0);
    for (Eigen::Index j = 0; j < n; ++j) acc += a(i, j) * x(j);
    if (acc != b(i)) {
      throw std::logic_error("solve_exact: back-substitution check failed");
    }
  }
  return x;
}

double float_determinant(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("float_determinant: matrix must be square");
  }
  if (m.rows() == 0) return 1.0;
  return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

Eigen::MatrixXd to_double(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j).to_double();
    }
  }
  return out;
}

}  // namespace muntzlab
