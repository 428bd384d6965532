#pragma once

#include <optional>

#include "qcmut/f2forms.hpp"
#include "qcmut/matrices.hpp"

namespace qcmut {

// Block multiplicities of the mod-4 normal form
//   diag(r [[2,1],[1,2]], s [[0,1],[1,0]], t [[0,2],[2,0]], p [2], m [0]).
struct NormalFormParams {
  int r = 0, s = 0, t = 0, p = 0, m = 0;
  int n() const { return 2 * (r + s) + 2 * t + p + m; }
  bool operator==(const NormalFormParams& rhs) const = default;
};

// Params in the unique minimal shape: either p = 0 and r in {0,1}, or
// p in {1,2} and r = 0.
class CanonicalParams {
public:
  explicit CanonicalParams(NormalFormParams p);
  const NormalFormParams& params() const { return p_; }
  bool operator==(const CanonicalParams& rhs) const = default;

private:
  NormalFormParams p_;
};

struct ReductionResult {
  CanonicalParams params;
  UnimodularTransform witness;  // P with P^T A P = normal form (mod 4)
  IntMatrix normal_mod4;        // entries in {0,1,2,3}
};

struct InvariantProfile {
  int n;
  RadicalDims dims;
  FormClass form_class;
  int det_mod4;
  CanonicalParams canonical;
};

// The block-diagonal matrix for the given multiplicities, blocks in the
// printed order r, s, t, p, m.
IntMatrix params_to_matrix(const NormalFormParams& params);

// Pure arithmetic route to the canonical representative: p lowered below 3,
// then either r drained into s (p >= 1) or lowered to its parity (p = 0).
CanonicalParams canonicalize_params(NormalFormParams params);

// A normal-form-shaped matrix together with the basis change that produced
// it; the unit the three block moves below operate on.
struct NormalFormContext {
  NormalFormParams params;
  IntMatrix gram;     // congruent copy of the original matrix, normal mod 4
  IntMatrix witness;  // witness^T A witness = gram, exactly

  static NormalFormContext from_params(const NormalFormParams& params);
};

// (r,s,t,p,m) -> (r,s,t+1,p-2,m): three isolated diagonal-2 vectors combine
// into a t-pair plus one survivor. Requires p >= 3.
NormalFormContext lower_p(NormalFormContext ctx);

// (r,s,...) -> (r-2,s+2,...): two r-pairs become s-pairs. Requires r >= 2.
NormalFormContext lower_r(NormalFormContext ctx);

// (r,s,...) -> (r-1,s+1,...) using one diagonal-2 vector. Requires p >= 1 and
// r >= 1.
NormalFormContext swap_r_to_s(NormalFormContext ctx);

// Full reduction: symplectic reduction of A mod 2 lifted over Z, sign
// normalization, hyperbolic-block cleanup, isolation of diagonal-2 radical
// vectors, halved reduction of the residual block, canonical block moves.
// The returned witness is verified against A before returning.
ReductionResult reduce_mod4(const SymEvenMatrix& a);

InvariantProfile invariant_profile(const SymEvenMatrix& a);

// det(A) mod 4 from (n, dim V0, dim V00) alone: +/-1 when the mod-2 rank is
// full (sign by n mod 4), 2 in the odd corank-one case with q(V0) = F2,
// 0 as soon as dim V00 >= 1.
int det_mod4_classify(int n, const RadicalDims& dims);
int det_mod4_classify(const InvariantProfile& profile);

struct CongruenceDecision {
  bool congruent;
  std::optional<UnimodularTransform> witness;
};

// Mod-4 congruence decision via canonical forms; on success the returned
// witness satisfies P^T A P = A2 (mod 4) and is verified before returning.
CongruenceDecision congruent_mod4(const SymEvenMatrix& a, const SymEvenMatrix& a2);

// Independent oracle: enumerates every matrix over Z/4 with det = +/-1
// (mod 4) -- each such class lifts to a unimodular integer matrix -- and
// tests P^T (A mod 4) P = A2 (mod 4). Capped at n <= 3.
bool brute_force_congruent_mod4(const SymEvenMatrix& a, const SymEvenMatrix& a2);

}  // namespace qcmut
