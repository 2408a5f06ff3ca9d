#include "k3kit/matrix.hpp"

#include <utility>

namespace k3kit {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_integer(m(i, j));
  return out;
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integral(m(i, j))) return false;
  return true;
}

IntMatrix clear_row_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_integer(m(i, j) * l);
  }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] -= factor * row[source]
void sub_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= factor * m(source, j);
}

void sub_col(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) -= factor * m(i, source);
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row echelon form by unimodular row operations (Euclid on each column).
// The same operations are applied to `track` when given.  Returns the pivot
// column of each pivot row, in order.
std::vector<std::size_t> integer_row_echelon(IntMatrix& work, IntMatrix* track) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < work.cols() && row < work.rows(); ++col) {
    while (true) {
      std::size_t best = work.rows();
      for (std::size_t i = row; i < work.rows(); ++i) {
        if (work(i, col) == 0) continue;
        if (best == work.rows() || abs(work(i, col)) < abs(work(best, col))) best = i;
      }
      if (best == work.rows()) break;
      swap_rows(work, row, best);
      if (track) swap_rows(*track, row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < work.rows(); ++i) {
        if (work(i, col) == 0) continue;
        Integer q = tdiv(work(i, col), work(row, col));
        sub_row(work, i, row, q);
        if (track) sub_row(*track, i, row, q);
        if (work(i, col) != 0) done = false;
      }
      if (done) {
        pivots.push_back(col);
        ++row;
        break;
      }
    }
  }
  return pivots;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::dimension, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      swap_rows(a, k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rational_rref(RatMatrix& a, RatMatrix* track) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
      if (track)
        for (std::size_t j = 0; j < track->cols(); ++j) std::swap((*track)(p, j), (*track)(row, j));
    }
    Rational inv = 1 / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    if (track)
      for (std::size_t j = 0; j < track->cols(); ++j) (*track)(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
      if (track)
        for (std::size_t j = 0; j < track->cols(); ++j) (*track)(i, j) -= f * (*track)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::dimension, "determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rational_rref(a, nullptr).size();
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::dimension, "inverse of a non-square matrix");
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(m.rows());
  if (rational_rref(a, &inv).size() != m.rows()) {
    throw Error(ErrorKind::singular, "matrix is singular");
  }
  return inv;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  auto pivots = integer_row_echelon(a, nullptr);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t c = pivots[r];
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) sub_row(a, i, r, fdiv(a(i, c), a(r, c)));
  }
  IntMatrix out(pivots.size(), a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) out(r, j) = a(r, j);
  return out;
}

IntVector smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t n = std::min(a.rows(), a.cols());
  IntVector out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = a.rows(), bj = a.cols();
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (a(i, j) == 0) continue;
          if (bi == a.rows() || abs(a(i, j)) < abs(a(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == a.rows()) {
        // remaining block is zero
        while (out.size() < n) out.push_back(0);
        return out;
      }
      swap_rows(a, t, bi);
      swap_cols(a, t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        sub_row(a, i, t, tdiv(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        sub_col(a, j, t, tdiv(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = 0; k < a.cols(); ++k) a(t, k) += a(i, k);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    out.push_back(abs(a(t, t)));
  }
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  IntMatrix work = m.transpose();
  IntMatrix track = IntMatrix::identity(n);
  const std::size_t r = integer_row_echelon(work, &track).size();
  IntMatrix basis(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i - r, j) = track(i, j);
  return hermite_normal_form(basis);
}

bool is_saturated(const IntMatrix& rows) {
  if (rows.rows() == 0) return true;
  if (rows.rows() > rows.cols()) return false;
  for (const auto& d : smith_invariants(rows))
    if (d != 1) return false;
  return true;
}

RatVector congruence_diagonal(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) {
    throw Error(ErrorKind::invalid_argument, "congruence diagonalization needs a symmetric matrix");
  }
  RatMatrix a = symmetric;
  const std::size_t n = a.rows();
  auto swap_both = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  RatVector diag;
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) == 0) {
      std::size_t j = i + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap_both(i, j);
      } else {
        j = i + 1;
        while (j < n && a(i, j) == 0) ++j;
        if (j == n) {
          diag.push_back(0);
          continue;
        }
        // e_i -> e_i + e_j makes the pivot 2 a(i,j) != 0
        for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
        for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
      }
    }
    const Rational pivot = a(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(j, i) == 0) continue;
      const Rational f = a(j, i) / pivot;
      for (std::size_t k = i; k < n; ++k) a(j, k) -= f * a(i, k);
      for (std::size_t k = i; k < n; ++k) a(k, j) -= f * a(k, i);
    }
    diag.push_back(pivot);
  }
  return diag;
}

IntMatrix complete_to_basis(const IntVector& v) {
  const std::size_t n = v.size();
  IntMatrix work = IntMatrix::column(v);
  IntMatrix track = IntMatrix::identity(n);
  integer_row_echelon(work, &track);
  if (n == 0 || abs(work(0, 0)) != 1) {
    throw Error(ErrorKind::invalid_argument, "vector is not primitive");
  }
  IntMatrix basis = to_integer(inverse(to_rational(track))).transpose();
  if (work(0, 0) < 0)
    for (std::size_t j = 0; j < n; ++j) basis(0, j) = -basis(0, j);
  return basis;
}

}  // namespace k3kit
