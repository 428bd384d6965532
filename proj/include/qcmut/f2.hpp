#pragma once

#include <cstdint>
#include <vector>

#include "qcmut/errors.hpp"
#include "qcmut/int_matrix.hpp"

namespace qcmut {

// Vector over F2, bit-packed into 64-bit words.
class F2Vector {
public:
  explicit F2Vector(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int n() const { return n_; }
  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool v) {
    uint64_t mask = uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }
  void xor_with(const F2Vector& rhs) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= rhs.w_[k];
  }
  bool is_zero() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool operator==(const F2Vector& rhs) const = default;

  // Canonical 0/1 integer lift as a column vector.
  std::vector<Int> lift() const {
    std::vector<Int> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = get(i) ? 1 : 0;
    return v;
  }

private:
  int n_;
  std::vector<uint64_t> w_;
};

// Square matrix over F2, one bit-packed row vector per row.
class F2Matrix {
public:
  explicit F2Matrix(int n) : n_(n), rows_(n, F2Vector(n)) {}

  // Entry-wise mod-2 reduction of an integer matrix.
  static F2Matrix from_integer(const IntMatrix& m);

  int n() const { return n_; }
  bool get(int i, int j) const { return rows_[i].get(j); }
  void set(int i, int j, bool v) { rows_[i].set(j, v); }
  const F2Vector& row(int i) const { return rows_[i]; }
  void row_xor(int dst, int src) { rows_[dst].xor_with(rows_[src]); }
  bool operator==(const F2Matrix& rhs) const = default;

  bool is_symmetric_zero_diag() const;

  F2Vector mul(const F2Vector& v) const;

private:
  int n_;
  std::vector<F2Vector> rows_;
};

// Rank over F2 (Gaussian elimination, lowest-index pivots).
int f2_rank(const F2Matrix& m);

// Basis of the right kernel {x : Mx = 0}; size n - rank, deterministic
// (free variables in increasing index order).
std::vector<F2Vector> f2_kernel_basis(const F2Matrix& m);

// Whether b lies in the column span of m.
bool f2_in_image(const F2Matrix& m, const F2Vector& b);

// Rank of [m | b1 ... bk] minus rank of m, i.e. how many of the targets are
// independent of the image.
int f2_rank_increase(const F2Matrix& m, const std::vector<F2Vector>& targets);

}  // namespace qcmut
