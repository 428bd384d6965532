#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcmut/errors.hpp"

namespace qcmut {

// Exact integer scalar. GMP keeps all arithmetic exact; entry growth under
// repeated mutation is unbounded, so fixed-width types are not an option.
using Int = mpz_class;

// Reduce into [0, m).
int mod_ui(const Int& v, unsigned m);

// Square integer matrix with exact entries, immutable in spirit: the mutating
// column operations below exist for the reduction engine, which owns its
// working copies. Dimension is always >= 1.
class IntMatrix {
public:
  explicit IntMatrix(int n);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix identity(int n);
  static IntMatrix zero(int n);

  int n() const { return n_; }
  const Int& at(int i, int j) const { return e_[idx(i, j)]; }
  Int& at(int i, int j) { return e_[idx(i, j)]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  // Entry-wise reduction into [0, m).
  IntMatrix reduced_mod(unsigned m) const;

  // Basis-change primitives; each acts on columns (basis vectors).
  void col_add(int dst, int src, const Int& coef);  // b_dst += coef * b_src
  void col_negate(int i);
  void col_swap(int i, int j);
  // Reorder columns so that new column i is old column perm[i].
  void permute_cols(const std::vector<int>& perm);

  // Congruence updates for a Gram matrix under the same basis changes.
  void gram_col_add(int dst, int src, const Int& coef);
  void gram_col_negate(int i);
  void gram_col_swap(int i, int j);
  void gram_permute(const std::vector<int>& perm);

  std::string to_text() const;  // one row per line, space-separated

private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_;
  std::vector<Int> e_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact determinant by Bareiss fraction-free elimination. All intermediate
// divisions are exact; never rounds.
Int det_exact(const IntMatrix& m);

// True iff a == b entry-wise modulo m.
bool equal_mod(const IntMatrix& a, const IntMatrix& b, unsigned m);

// Inverse of a matrix with det = +/-1; exact, throws PreconditionError if the
// matrix is not unimodular.
IntMatrix inverse_unimodular(const IntMatrix& p);

}  // namespace qcmut
