#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qcmut/f2forms.hpp"
#include "qcmut/matrices.hpp"
#include "qcmut/normalform.hpp"

namespace qcmut {

// Ordered mutation directions, 1-based.
struct MutationSequence {
  std::vector<int> directions;
};

// Symmetric choice of signs for the off-diagonal entries of a companion.
class SignChoice {
public:
  static SignChoice all_plus(int n);
  static SignChoice all_minus(int n);
  // Validates entries in {+1,-1} off the diagonal and symmetry.
  static SignChoice from_matrix(const IntMatrix& m);

  int n() const { return n_; }
  int at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, int sign);

private:
  explicit SignChoice(int n) : n_(n), e_(static_cast<size_t>(n) * n, 1) {}
  int n_;
  std::vector<int8_t> e_;
};

struct ClassScanReport {
  long visited = 0;
  int depth_reached = 0;
  std::set<int> delta_values;
  std::set<FormClass> form_classes;
  std::set<int> companion_det_mod4;
  long involution_violations = 0;
  bool truncated = false;
};

// Mutation in direction k (1-based): row and column k flip sign, every other
// entry picks up [B_ik]+ [B_kj]+ - [-B_ik]+ [-B_kj]+.
SkewSymMatrix mutate(const SkewSymMatrix& b, int k);

// Left-to-right fold of mutate.
SkewSymMatrix mutate_seq(const SkewSymMatrix& b, const MutationSequence& seq);

// S(B) = V(B) + V(B)^t: diagonal 2, upper triangle copied from B.
SymEvenMatrix standard_companion(const SkewSymMatrix& b);

// Diagonal 2, off-diagonal eps[i][j] * |B[i][j]|.
SymEvenMatrix companion_with_signs(const SkewSymMatrix& b, const SignChoice& eps);

bool is_companion(const SymEvenMatrix& a, const SkewSymMatrix& b);

// det(S(B)) mod 4; the same value for every companion of B.
int delta(const SkewSymMatrix& b);

struct DeltaDiscrepancy {
  bool differs = false;
  bool criterion_met = false;
  int rank = 0;             // common mod-2 rank
  int radical_value_b = 0;  // 1 iff Q_B takes the value 1 on the radical
  int radical_value_b2 = 0;
  std::string explanation;
};

// Requires equal mod-2 ranks (RankMismatch otherwise). Evaluates both delta
// values and the criterion "n odd, rank n-1, Q values on the radicals
// differ", and cross-checks that the two agree.
DeltaDiscrepancy delta_discrepancy(const SkewSymMatrix& b, const SkewSymMatrix& b2);

// True iff Q_B and q_A are equal as quadratic-form data (same basis values,
// same mod-2 Gram). Requires is_companion(a, b).
bool companion_q_coincidence(const SkewSymMatrix& b, const SymEvenMatrix& a);

inline constexpr uint64_t kScanDefaultSeed = 0x5eed5eed5eedULL;

// Breadth-first scan of the mutation class, deduplicating by exact entry
// equality. Records delta, the class of Q, and sampled companion
// determinants mod 4 at every node; checks involution on every edge.
// Truncation by the caps is reported, never silent.
ClassScanReport scan_class(const SkewSymMatrix& b, int max_depth, long max_nodes,
                           uint64_t seed = kScanDefaultSeed);

}  // namespace qcmut
