#include "ldv/lattice.hpp"

#include <algorithm>
#include <utility>

#include "ldv/errors.hpp"

namespace ldv {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<ExponentVector>& rows) {
  if (rows.empty()) throw InputError("matrix needs at least one row");
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<ExponentVector>& cols) {
  return from_rows(cols).transposed();
}

namespace {
std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw InputError("integer entry exceeds 64 bits");
  return z.get_si();
}
}  // namespace

ExponentVector IntegerMatrix::row(std::size_t i) const {
  ExponentVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = to_int64((*this)(i, j));
  return r;
}

ExponentVector IntegerMatrix::column(std::size_t j) const {
  ExponentVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = to_int64((*this)(i, j));
  return c;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Integer IntegerMatrix::determinant() const {
  if (!is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IntegerMatrix::is_unimodular() const {
  if (!is_square()) return false;
  return abs(determinant()) == 1;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

ExponentVector IntegerMatrix::apply(const ExponentVector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  ExponentVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * static_cast<long>(v[j]);
    out[i] = to_int64(s);
  }
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product size mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string to_string(const IntegerMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).get_str();
    }
  }
  return s + "]";
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
    if (s(i, i) != 0) out.push_back(s(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const { return invariant_factors().size(); }

namespace {

// Position of the nonzero entry of least absolute value in the trailing
// block starting at (t, t).
bool min_abs_entry(const IntegerMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Integer a = abs(s(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
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

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix s = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t diag = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!min_abs_entry(s, t, pi, pj)) break;
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    s.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q = -tdiv(s(i, t), s(t, t));
        s.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q = -tdiv(s(t, j), s(t, t));
        s.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to the pivot.
        std::size_t bi = t, bj = t;
        Integer best = abs(s(t, t));
        for (std::size_t i = t + 1; i < s.rows(); ++i)
          if (s(i, t) != 0 && abs(s(i, t)) < best) {
            best = abs(s(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(t, j) != 0 && abs(s(t, j)) < best) {
            best = abs(s(t, j));
            bi = t;
            bj = j;
          }
        s.swap_rows(t, bi);
        u.swap_rows(t, bi);
        s.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      // Divisibility chain: fold an offending row into the pivot row.
      bool divisible = true;
      for (std::size_t i = t + 1; i < s.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

bool is_saturated(const IntegerMatrix& q) {
  if (q.rows() == 0) return true;
  auto snf = smith_normal_form(q);
  auto factors = snf.invariant_factors();
  if (factors.size() != q.rows()) return false;
  return std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; });
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  std::size_t p = 0;
  for (std::size_t col = 0; col < h.cols() && p < h.rows(); ++col) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = p; i < h.rows(); ++i)
        if (h(i, col) != 0 && (best == h.rows() || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best == h.rows()) break;
      h.swap_rows(p, best);
      bool done = true;
      for (std::size_t i = p + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        h.add_row_multiple(i, p, -tdiv(h(i, col), h(p, col)));
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(p, col) == 0) continue;
    if (h(p, col) < 0) h.negate_row(p);
    for (std::size_t i = 0; i < p; ++i) h.add_row_multiple(i, p, -fdiv(h(i, col), h(p, col)));
    ++p;
  }
  IntegerMatrix out(p, h.cols());
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& b) {
  if (!b.is_square()) throw InputError("inverse_unimodular: matrix is not square");
  auto snf = smith_normal_form(b);
  if (snf.s != IntegerMatrix::identity(b.rows()))
    throw InputError("inverse_unimodular: matrix is not unimodular");
  return snf.v * snf.u;
}

namespace {

IntegerMatrix stack_rows(const IntegerMatrix& top, const std::vector<ExponentVector>& extra) {
  IntegerMatrix out(top.rows() + extra.size(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t k = 0; k < extra.size(); ++k)
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + k, j) = static_cast<long>(extra[k][j]);
  return out;
}

IntegerMatrix columns_from(const IntegerMatrix& q, const IntegerMatrix& extra_rows) {
  const std::size_t n = q.cols();
  IntegerMatrix b(n, n);
  for (std::size_t j = 0; j < q.rows(); ++j)
    for (std::size_t i = 0; i < n; ++i) b(i, j) = q(j, i);
  for (std::size_t k = 0; k < extra_rows.rows(); ++k)
    for (std::size_t i = 0; i < n; ++i) b(i, q.rows() + k) = extra_rows(k, i);
  return b;
}

IntegerMatrix smith_completion(const IntegerMatrix& q) {
  const std::size_t r = q.rows(), n = q.cols();
  auto snf = smith_normal_form(q);
  IntegerMatrix v_inv = inverse_unimodular(snf.v);
  IntegerMatrix added(n - r, n);
  for (std::size_t k = 0; k < n - r; ++k)
    for (std::size_t j = 0; j < n; ++j) added(k, j) = v_inv(r + k, j);
  if (n - r > 0) {
    added = hermite_normal_form(added);
    // Reduce modulo the lattice of Q at its Hermite pivots.
    IntegerMatrix hq = hermite_normal_form(q);
    for (std::size_t k = 0; k < added.rows(); ++k)
      for (std::size_t h = 0; h < hq.rows(); ++h) {
        std::size_t pc = 0;
        while (hq(h, pc) == 0) ++pc;
        Integer f = fdiv(added(k, pc), hq(h, pc));
        for (std::size_t j = 0; j < n; ++j) added(k, j) -= f * hq(h, j);
      }
  }
  return columns_from(q, added);
}

}  // namespace

IntegerMatrix extend_to_unimodular(const IntegerMatrix& q, CompletionStrategy strategy) {
  if (q.rows() > q.cols()) throw InputError("Q has more generators than the ambient dimension");
  if (!is_saturated(q)) throw InputError("Q does not generate a saturated sublattice");
  const std::size_t r = q.rows(), n = q.cols();

  IntegerMatrix b;
  if (strategy == CompletionStrategy::kCoordinate) {
    std::vector<ExponentVector> chosen;
    std::vector<std::size_t> axes;
    for (std::size_t i = n; i-- > 0 && chosen.size() < n - r;) {
      ExponentVector e(n, 0);
      e[i] = 1;
      chosen.push_back(e);
      if (is_saturated(stack_rows(q, chosen))) {
        axes.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
    if (axes.size() == n - r) {
      std::sort(axes.begin(), axes.end());
      IntegerMatrix added(n - r, n);
      for (std::size_t k = 0; k < axes.size(); ++k) added(k, axes[k]) = 1;
      b = columns_from(q, added);
    }
  }
  if (b.rows() == 0) b = smith_completion(q);
  if (!b.is_unimodular()) throw Error("extend_to_unimodular produced a singular basis");
  return b;
}

}  // namespace ldv
