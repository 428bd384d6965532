#pragma once

#include "qcmut/int_matrix.hpp"

namespace qcmut {

// Symmetric integer matrix with even diagonal; the Gram matrix of the
// bilinear form (v, w) = v^T A w.
class SymEvenMatrix {
public:
  const IntMatrix& matrix() const { return m_; }
  int n() const { return m_.n(); }
  const Int& at(int i, int j) const { return m_.at(i, j); }

private:
  friend SymEvenMatrix validate_sym_even(const IntMatrix& m);
  explicit SymEvenMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

// Skew-symmetric integer matrix, the object mutation acts on.
class SkewSymMatrix {
public:
  const IntMatrix& matrix() const { return m_; }
  int n() const { return m_.n(); }
  const Int& at(int i, int j) const { return m_.at(i, j); }
  bool operator==(const SkewSymMatrix& rhs) const { return m_ == rhs.m_; }

private:
  friend SkewSymMatrix validate_skew(const IntMatrix& m);
  explicit SkewSymMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

// Integer matrix P with det(P) = +1 or -1; the witness of a congruence
// A -> P^T A P.
class UnimodularTransform {
public:
  explicit UnimodularTransform(IntMatrix p);
  static UnimodularTransform identity(int n);

  const IntMatrix& matrix() const { return p_; }
  int n() const { return p_.n(); }
  int det_sign() const { return det_sign_; }

  UnimodularTransform operator*(const UnimodularTransform& rhs) const;
  UnimodularTransform inverse() const;

private:
  IntMatrix p_;
  int det_sign_;
};

// Throws NotSymmetric(i,j) / OddDiagonal(i), naming the first violating index
// (lower-triangle scan order).
SymEvenMatrix validate_sym_even(const IntMatrix& m);

// Throws NotSkew(i,j); the diagonal is covered by the i == j case.
SkewSymMatrix validate_skew(const IntMatrix& m);

// P^T A P, exact. The result provably retains the input's symmetry kind and
// is re-validated on the way out.
SymEvenMatrix congruence_apply(const SymEvenMatrix& a, const UnimodularTransform& p);
SkewSymMatrix congruence_apply(const SkewSymMatrix& b, const UnimodularTransform& p);

}  // namespace qcmut
