#include "toric/ratlinalg.hpp"

#include <algorithm>

namespace toric {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error("from_rows: ragged input");
    for (size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
  if (cols.empty()) return IntMatrix();
  IntMatrix m(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw Error("from_columns: ragged input");
    for (size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMatrix::row(size_t i) const {
  IntVec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntVec IntMatrix::column(size_t j) const {
  IntVec c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix product: shape mismatch");
  IntMatrix p(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

void IntMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// row_i -= q * row_t on s, mirrored on u
void row_sub(IntMatrix& s, IntMatrix& u, size_t i, size_t t, const Int& q) {
  for (size_t j = 0; j < s.cols(); ++j) s(i, j) -= q * s(t, j);
  for (size_t j = 0; j < u.cols(); ++j) u(i, j) -= q * u(t, j);
}

void col_sub(IntMatrix& s, IntMatrix& v, size_t j, size_t t, const Int& q) {
  for (size_t i = 0; i < s.rows(); ++i) s(i, j) -= q * s(i, t);
  for (size_t i = 0; i < v.rows(); ++i) v(i, j) -= q * v(i, t);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const size_t m = a.rows(), n = a.cols();
  SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& u = f.u;
  IntMatrix& s = f.s;
  IntMatrix& v = f.v;

  size_t t = 0;
  const size_t steps = std::min(m, n);
  for (; t < steps; ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing submatrix, row-major tie break
      size_t pi = m, pj = n;
      Int best;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j) {
          const Int& x = s(i, j);
          if (x == 0) continue;
          Int ax = abs(x);
          if (pi == m || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) break;  // trailing submatrix is zero
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool again = false;
      for (size_t i = t + 1; i < m && !again; ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / s(t, t);
        row_sub(s, u, i, t, q);
        if (s(i, t) != 0) again = true;  // remainder smaller than pivot
      }
      if (again) continue;
      for (size_t j = t + 1; j < n && !again; ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / s(t, t);
        col_sub(s, v, j, t, q);
        if (s(t, j) != 0) again = true;
      }
      if (again) continue;

      // pivot now lone in its row/column; enforce divisibility of the rest
      bool fixed = false;
      for (size_t i = t + 1; i < m && !fixed; ++i)
        for (size_t j = t + 1; j < n && !fixed; ++j)
          if (s(i, j) % s(t, t) != 0) {
            row_sub(s, u, t, i, Int(-1));  // row_t += row_i
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t < steps && s(t, t) == 0) break;
    if (t < steps && s(t, t) < 0) {
      for (size_t j = 0; j < n; ++j) s(t, j) = -s(t, j);
      for (size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  return f;
}

std::vector<IntVec> integer_kernel_basis(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  const size_t n = a.cols();
  size_t rank = 0;
  const size_t steps = std::min(a.rows(), n);
  for (size_t i = 0; i < steps; ++i)
    if (f.s(i, i) != 0) ++rank;
  std::vector<IntVec> basis;
  basis.reserve(n - rank);
  for (size_t j = rank; j < n; ++j) {
    IntVec col = f.v.column(j);
    // columns of a unimodular matrix are primitive; fix the sign only
    for (const auto& x : col) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : col) y = -y;
      break;
    }
    basis.push_back(std::move(col));
  }
  return basis;
}

IntVec primitive_vector(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) throw Error("zero vector has no primitive generator");
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec primitive_vector(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i]) * (l / denominator(v[i]));
  return primitive_vector(w);
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("determinant: square matrix required");
  const size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

IntVec vec_neg(const IntVec& v) {
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero_vec(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<RatVec> rat_rref(std::vector<RatVec> rows) {
  if (rows.empty()) return rows;
  const size_t n = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < n && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = rows[r][c];
    for (size_t j = c; j < n; ++j) rows[r][j] /= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

size_t rat_rank(std::vector<RatVec> rows) { return rat_rref(std::move(rows)).size(); }

std::vector<RatVec> rat_kernel_basis(const std::vector<RatVec>& rows, size_t ncols) {
  std::vector<RatVec> rr = rat_rref(rows);
  std::vector<size_t> pivot_col;
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& row : rr) {
    size_t c = 0;
    while (c < ncols && row[c] == 0) ++c;
    pivot_col.push_back(c);
    if (c < ncols) is_pivot[c] = true;
  }
  std::vector<RatVec> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(ncols, Rat(0));
    x[f] = 1;
    for (size_t i = 0; i < rr.size(); ++i) {
      if (pivot_col[i] < ncols) x[pivot_col[i]] = -rr[i][f];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVec> solve_linear(const std::vector<RatVec>& rows, const RatVec& rhs) {
  if (rows.size() != rhs.size()) throw Error("solve_linear: shape mismatch");
  if (rows.empty()) return RatVec();
  const size_t n = rows[0].size();
  std::vector<RatVec> aug(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    aug[i] = rows[i];
    aug[i].push_back(rhs[i]);
  }
  aug = rat_rref(std::move(aug));
  RatVec x(n, Rat(0));
  for (const auto& row : aug) {
    size_t c = 0;
    while (c < n && row[c] == 0) ++c;
    if (c == n) {
      if (row[n] != 0) return std::nullopt;  // 0 = nonzero
      continue;
    }
    // free variables are set to 0, so the pivot value is just the rhs entry
    x[c] = row[n];
  }
  for (size_t i = 0; i < rows.size(); ++i)
    if (dot(rows[i], x) != rhs[i]) return std::nullopt;
  return x;
}

std::vector<IntVec> lattice_rref(const std::vector<RatVec>& rows) {
  std::vector<RatVec> rr = rat_rref(rows);
  std::vector<IntVec> out;
  out.reserve(rr.size());
  for (const auto& row : rr) out.push_back(primitive_vector(row));
  return out;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace toric
