#include "qcmut/int_matrix.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace qcmut {

int mod_ui(const Int& v, unsigned m) {
  return static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), m));
}

IntMatrix::IntMatrix(int n) : n_(n) {
  if (n < 1) throw ValidationError("BadDimension", "matrix dimension must be positive");
  e_.resize(static_cast<size_t>(n) * n);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_)
      throw ValidationError("NotSquare", "row length differs from row count");
    int j = 0;
    for (long v : row) at(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.n_)
      throw ValidationError("NotSquare", "row length differs from row count");
    for (int j = 0; j < m.n_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::zero(int n) { return IntMatrix(n); }

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw ValidationError("DimensionMismatch", "matrix product dimension mismatch");
  IntMatrix out(n_);
  Int acc;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      acc = 0;
      for (int k = 0; k < n_; ++k) acc += at(i, k) * rhs.at(k, j);
      out.at(i, j) = acc;
    }
  }
  return out;
}

IntMatrix IntMatrix::reduced_mod(unsigned m) const {
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = mod_ui(at(i, j), m);
  return out;
}

void IntMatrix::col_add(int dst, int src, const Int& coef) {
  for (int i = 0; i < n_; ++i) at(i, dst) += coef * at(i, src);
}

void IntMatrix::col_negate(int i) {
  for (int r = 0; r < n_; ++r) at(r, i) = -at(r, i);
}

void IntMatrix::col_swap(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < n_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::permute_cols(const std::vector<int>& perm) {
  std::vector<Int> fresh(e_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) fresh[idx(i, j)] = at(i, perm[j]);
  e_ = std::move(fresh);
}

void IntMatrix::gram_col_add(int dst, int src, const Int& coef) {
  // Gram update for b_dst += coef * b_src: row then column; the diagonal
  // picks up the quadratic term through the second pass.
  for (int j = 0; j < n_; ++j) at(dst, j) += coef * at(src, j);
  for (int i = 0; i < n_; ++i) at(i, dst) += coef * at(i, src);
}

void IntMatrix::gram_col_negate(int i) {
  for (int j = 0; j < n_; ++j) at(i, j) = -at(i, j);
  for (int r = 0; r < n_; ++r) at(r, i) = -at(r, i);
}

void IntMatrix::gram_col_swap(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < n_; ++c) std::swap(at(i, c), at(j, c));
  for (int r = 0; r < n_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::gram_permute(const std::vector<int>& perm) {
  std::vector<Int> fresh(e_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) fresh[idx(i, j)] = at(perm[i], perm[j]);
  e_ = std::move(fresh);
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  return os << m.to_text();
}

Int det_exact(const IntMatrix& m) {
  const int n = m.n();
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

bool equal_mod(const IntMatrix& a, const IntMatrix& b, unsigned m) {
  if (a.n() != b.n()) return false;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      if (mod_ui(a.at(i, j), m) != mod_ui(b.at(i, j), m)) return false;
  return true;
}

IntMatrix inverse_unimodular(const IntMatrix& p) {
  const Int d = det_exact(p);
  if (d != 1 && d != -1)
    throw PreconditionError("NotUnimodular", "inverse requested for a matrix with det != +/-1");
  const int n = p.n();
  // Exact Gauss-Jordan over Q on [p | I]; the result is integral because
  // det = +/-1.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = mpq_class(p.at(i, j));
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw InternalInconsistency("unimodular matrix is singular");
    std::swap(a[c], a[pivot]);
    mpq_class inv = 1 / a[c][c];
    for (int j = c; j < 2 * n; ++j) a[c][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (int j = c; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpq_class& v = a[i][n + j];
      v.canonicalize();
      if (v.get_den() != 1) throw InternalInconsistency("unimodular inverse is not integral");
      out.at(i, j) = v.get_num();
    }
  if (!(p * out == IntMatrix::identity(n)))
    throw InternalInconsistency("unimodular inverse verification failed");
  return out;
}

}  // namespace qcmut
