#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qcmut/f2.hpp"
#include "qcmut/matrices.hpp"

namespace qcmut {

// Quadratic form on F2^n: values on the standard basis plus the Gram matrix
// of the associated alternating bilinear form Omega. Together these determine
// q everywhere via q(u+v) = q(u) + q(v) + Omega(u,v).
struct QuadraticFormF2 {
  int n;
  F2Vector basis_values;
  F2Matrix gram;
  bool operator==(const QuadraticFormF2& rhs) const = default;
};

// Symplectic basis data: hyperbolic pairs (e_i, f_i), a basis of the radical,
// and an integer lift assembling them as columns with det = +/-1.
struct SymplecticFrame {
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> pairs;
  std::vector<std::vector<Int>> radical_basis;
  UnimodularTransform lift;
};

struct AlternatingReduction {
  SymplecticFrame frame;
  int pair_count;   // k
  int radical_dim;  // ell = n - 2k
};

// Isomorphism-class data of a quadratic form: one of
//   (i)   q(V0) = 0, Arf = 1
//   (ii)  q(V0) = 0, Arf = 0
//   (iii) q(V0) = F2          (Arf undefined)
struct FormClass {
  int n = 0;
  int dim_radical = 0;
  int radical_value = 0;
  std::optional<int> arf;
  auto operator<=>(const FormClass& rhs) const = default;
};

// "(i)", "(ii)" or "(iii)".
const char* form_class_label(const FormClass& c);

// u^T g v over F2.
int f2_bilinear(const F2Matrix& g, const F2Vector& u, const F2Vector& v);

F2Vector reduce_mod2(const std::vector<Int>& v);

// Core engine shared with the mod-4 pipeline: reduces an alternating F2
// matrix in place by basis operations b_dst += b_src, reporting each through
// add_cb. No columns are physically moved; the returned layout lists the
// hyperbolic pairs and radical as positions in the original indexing.
struct SymplecticLayout {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> radical;
};
SymplecticLayout symplectic_reduce_f2(F2Matrix& g,
                                      const std::function<void(int, int)>& add_cb);

// Symplectic reduction of an alternating matrix over F2 with an integer
// witness: lift^T abar lift mod 2 = diag(k [[0,1],[1,0]], ell [0]) and
// det(lift) = +/-1 over Z. Throws NotAlternating.
AlternatingReduction alternating_reduce(const F2Matrix& abar);

// q(v) = (v,v)/2 mod 2 read off the diagonal; gram = A mod 2.
QuadraticFormF2 q_from_sym_even(const SymEvenMatrix& a);

// Q(b) = 1 on every basis vector; gram = B mod 2.
QuadraticFormF2 q_from_skew(const SkewSymMatrix& b);

// q(sum v_i b_i) = sum v_i q(b_i) + sum_{i<j} v_i v_j Omega(b_i, b_j).
int q_eval(const QuadraticFormF2& form, const F2Vector& v);

// dims of V0bar, V00bar, V000bar for the form of a symmetric even matrix.
struct RadicalDims {
  int d0 = 0, d00 = 0, d000 = 0;
  bool operator==(const RadicalDims&) const = default;
};
RadicalDims radical_dims(const SymEvenMatrix& a);

// Arf(q) = sum q(e_i) q(f_i) over the frame's pairs. Throws RadicalNonzero
// when q does not vanish on the radical (class (iii)).
int arf(const SymplecticFrame& frame, const QuadraticFormF2& form);

FormClass classify_form(const QuadraticFormF2& form);
FormClass classify_form(const SymEvenMatrix& a);

// Complete invariant: dimension, radical dimension, q(V0), and Arf where
// defined.
bool forms_isomorphic(const FormClass& c1, const FormClass& c2);

}  // namespace qcmut
