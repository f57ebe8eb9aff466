#include "tfano/matrix.hpp"

#include <utility>

namespace tfano {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(RatMatrix::from_rows(rows, cols));
}

std::vector<RatVec> nullspace(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  RatMatrix e = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    RatVec v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -e(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  RatMatrix e = rref(aug, &piv);
  RatVec x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == a.cols()) return std::nullopt;
    x[piv[i]] = e(i, a.cols());
  }
  return x;
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::IncompatibleDimension, "determinant of non-square");
  std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) { return num(determinant(to_rat(m))); }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) return std::nullopt;
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  RatMatrix e = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e(i, n + j);
  return inv;
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
// row a += k * row b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Integer& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += k * m(b, j);
}
void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Integer& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) += k * m(i, b);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s;
  s.D = m;
  s.P = IntMatrix::identity(m.rows());
  s.Q = IntMatrix::identity(m.cols());
  IntMatrix& D = s.D;
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // pivot: smallest nonzero magnitude in the trailing block
    bool found = false;
    std::size_t pi = 0, pj = 0;
    Integer best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (D(i, j) == 0) continue;
        Integer a = boost::multiprecision::abs(D(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    swap_rows(D, t, pi);
    swap_rows(s.P, t, pi);
    swap_cols(D, t, pj);
    swap_cols(s.Q, t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        add_row(D, i, t, -q);
        add_row(s.P, i, t, -q);
        if (D(i, t) != 0) {
          swap_rows(D, t, i);
          swap_rows(s.P, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        add_col(D, j, t, -q);
        add_col(s.Q, j, t, -q);
        if (D(t, j) != 0) {
          swap_cols(D, t, j);
          swap_cols(s.Q, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and retry
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row(D, t, i, 1);
            add_row(s.P, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < rows; ++j) s.P(t, j) = -s.P(t, j);
    }
  }
  s.rank = t;
  return s;
}

std::vector<IntVec> integer_kernel(const IntMatrix& m) {
  std::vector<IntVec> basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      IntVec e(m.cols(), Integer(0));
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  SmithForm s = smith_normal_form(m);
  for (std::size_t j = s.rank; j < m.cols(); ++j) basis.push_back(s.Q.col(j));
  return basis;
}

std::vector<IntVec> saturated_lattice_basis(const std::vector<RatVec>& vectors, std::size_t n) {
  std::vector<RatVec> rows;
  for (const auto& v : vectors)
    if (!is_zero(v)) rows.push_back(v);
  if (rows.empty()) return {};
  // orthogonal complement, then its integer kernel
  auto perp = nullspace(RatMatrix::from_rows(rows, n));
  std::vector<std::vector<Integer>> krows;
  for (const auto& p : perp) krows.push_back(primitive(p));
  IntMatrix k(krows.size(), n);
  for (std::size_t i = 0; i < krows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) = krows[i][j];
  return integer_kernel(k);
}

bool in_row_lattice(const IntMatrix& b, const IntVec& x) {
  if (x.size() != b.cols()) throw Error(ErrorCode::IncompatibleDimension, "lattice membership");
  SmithForm s = smith_normal_form(b);
  // x = y b  <=>  x Q = (y P^{-1}) D
  for (std::size_t j = 0; j < b.cols(); ++j) {
    Integer z = 0;
    for (std::size_t i = 0; i < b.cols(); ++i) z += x[i] * s.Q(i, j);
    if (j < s.rank) {
      if (z % s.D(j, j) != 0) return false;
    } else if (z != 0) {
      return false;
    }
  }
  return true;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!in_row_lattice(b, a.row(i))) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!in_row_lattice(a, b.row(i))) return false;
  return true;
}

}  // namespace tfano
