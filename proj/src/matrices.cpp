#include "qcmut/matrices.hpp"

#include <string>

namespace qcmut {

SymEvenMatrix validate_sym_even(const IntMatrix& m) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < i; ++j)
      if (m.at(i, j) != m.at(j, i))
        throw ValidationError("NotSymmetric", "entry (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") differs from its mirror");
  for (int i = 0; i < m.n(); ++i)
    if (mod_ui(m.at(i, i), 2) != 0)
      throw ValidationError("OddDiagonal", "diagonal entry " + std::to_string(i) + " is odd");
  return SymEvenMatrix(m);
}

SkewSymMatrix validate_skew(const IntMatrix& m) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j <= i; ++j)
      if (m.at(i, j) != -m.at(j, i))
        throw ValidationError("NotSkew", "entry (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") is not the negated mirror");
  return SkewSymMatrix(m);
}

UnimodularTransform::UnimodularTransform(IntMatrix p) : p_(std::move(p)) {
  const Int d = det_exact(p_);
  if (d == 1)
    det_sign_ = 1;
  else if (d == -1)
    det_sign_ = -1;
  else
    throw ValidationError("NotUnimodular", "det must be +1 or -1, got " + d.get_str());
}

UnimodularTransform UnimodularTransform::identity(int n) {
  return UnimodularTransform(IntMatrix::identity(n));
}

UnimodularTransform UnimodularTransform::operator*(const UnimodularTransform& rhs) const {
  return UnimodularTransform(p_ * rhs.p_);
}

UnimodularTransform UnimodularTransform::inverse() const {
  return UnimodularTransform(inverse_unimodular(p_));
}

namespace {

IntMatrix congruence_raw(const IntMatrix& a, const UnimodularTransform& p) {
  if (a.n() != p.n())
    throw ValidationError("DimensionMismatch", "matrix is " + std::to_string(a.n()) +
                                                   "x" + std::to_string(a.n()) + ", transform is " +
                                                   std::to_string(p.n()) + "x" + std::to_string(p.n()));
  return p.matrix().transpose() * a * p.matrix();
}

}  // namespace

SymEvenMatrix congruence_apply(const SymEvenMatrix& a, const UnimodularTransform& p) {
  return validate_sym_even(congruence_raw(a.matrix(), p));
}

SkewSymMatrix congruence_apply(const SkewSymMatrix& b, const UnimodularTransform& p) {
  return validate_skew(congruence_raw(b.matrix(), p));
}

}  // namespace qcmut
