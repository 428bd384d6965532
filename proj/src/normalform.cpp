#include "qcmut/normalform.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace qcmut {

namespace {

void require_nonnegative(const NormalFormParams& p) {
  if (p.r < 0 || p.s < 0 || p.t < 0 || p.p < 0 || p.m < 0)
    throw ValidationError("NegativeMultiplicity", "block multiplicities must be non-negative");
}

}  // namespace

CanonicalParams::CanonicalParams(NormalFormParams p) : p_(p) {
  require_nonnegative(p);
  const bool no_two = p.p == 0 && (p.r == 0 || p.r == 1);
  const bool has_two = (p.p == 1 || p.p == 2) && p.r == 0;
  if (!no_two && !has_two)
    throw ValidationError("NotCanonical",
                          "canonical params need p = 0, r in {0,1} or p in {1,2}, r = 0");
}

IntMatrix params_to_matrix(const NormalFormParams& params) {
  require_nonnegative(params);
  IntMatrix out(params.n());
  int pos = 0;
  for (int i = 0; i < params.r; ++i, pos += 2) {
    out.at(pos, pos) = 2;
    out.at(pos, pos + 1) = 1;
    out.at(pos + 1, pos) = 1;
    out.at(pos + 1, pos + 1) = 2;
  }
  for (int i = 0; i < params.s; ++i, pos += 2) {
    out.at(pos, pos + 1) = 1;
    out.at(pos + 1, pos) = 1;
  }
  for (int i = 0; i < params.t; ++i, pos += 2) {
    out.at(pos, pos + 1) = 2;
    out.at(pos + 1, pos) = 2;
  }
  for (int i = 0; i < params.p; ++i, pos += 1) out.at(pos, pos) = 2;
  return out;
}

CanonicalParams canonicalize_params(NormalFormParams params) {
  require_nonnegative(params);
  while (params.p >= 3) {
    params.p -= 2;
    params.t += 1;
  }
  if (params.p >= 1) {
    params.s += params.r;
    params.r = 0;
  } else {
    params.s += 2 * (params.r / 2);
    params.r %= 2;
  }
  return CanonicalParams(params);
}

NormalFormContext NormalFormContext::from_params(const NormalFormParams& params) {
  IntMatrix gram = params_to_matrix(params);
  return {params, gram, IntMatrix::identity(gram.n())};
}

namespace {

void check_context(const NormalFormContext& ctx) {
  require_nonnegative(ctx.params);
  if (ctx.gram.n() != ctx.params.n() || ctx.witness.n() != ctx.params.n())
    throw ValidationError("DimensionMismatch", "context matrices do not match the multiplicities");
  if (!equal_mod(ctx.gram, params_to_matrix(ctx.params), 4))
    throw PreconditionError("ShapeMismatch", "Gram matrix is not the stated normal form mod 4");
}

struct Mover {
  NormalFormContext& ctx;
  void add(int dst, int src, long coef) {
    ctx.gram.gram_col_add(dst, src, coef);
    ctx.witness.col_add(dst, src, coef);
  }
};

}  // namespace

NormalFormContext lower_p(NormalFormContext ctx) {
  check_context(ctx);
  if (ctx.params.p < 3)
    throw PreconditionError("PreconditionFailed", "lower_p needs p >= 3, have p = " +
                                                      std::to_string(ctx.params.p));
  // g1,g2,g3 -> g1+g2, g2+g3, g1+g2+g3 on the first three diagonal-2 slots;
  // the fresh [[0,2],[2,0]] pair lands exactly where the t block ends.
  const int base = 2 * (ctx.params.r + ctx.params.s) + 2 * ctx.params.t;
  Mover mv{ctx};
  mv.add(base + 2, base, 1);
  mv.add(base + 2, base + 1, 1);
  mv.add(base, base + 1, 1);
  mv.add(base + 1, base + 2, 1);
  mv.add(base + 1, base, -1);
  ctx.params.t += 1;
  ctx.params.p -= 2;
  check_context(ctx);
  return ctx;
}

NormalFormContext lower_r(NormalFormContext ctx) {
  check_context(ctx);
  if (ctx.params.r < 2)
    throw PreconditionError("PreconditionFailed", "lower_r needs r >= 2, have r = " +
                                                      std::to_string(ctx.params.r));
  // Acts on the last two r-pairs so the transformed pairs are already
  // adjacent to the s block:
  //   e1' = e1+f2, f1' = f1+e1+f2,
  //   e2' = (e2-f1)+2(e1+f2), f2' = f2+2f1+e2'.
  const int a = 2 * ctx.params.r - 4, b = a + 1, c = a + 2, d = a + 3;
  Mover mv{ctx};
  mv.add(a, d, 1);
  mv.add(b, a, 1);
  mv.add(c, b, -1);
  mv.add(c, a, 3);
  mv.add(d, b, 2);
  mv.add(d, a, -2);
  mv.add(d, c, 1);
  ctx.params.r -= 2;
  ctx.params.s += 2;
  check_context(ctx);
  return ctx;
}

NormalFormContext swap_r_to_s(NormalFormContext ctx) {
  check_context(ctx);
  if (ctx.params.p < 1 || ctx.params.r < 1)
    throw PreconditionError("PreconditionFailed",
                            "swap_r_to_s needs p >= 1 and r >= 1, have p = " +
                                std::to_string(ctx.params.p) + ", r = " +
                                std::to_string(ctx.params.r));
  // Last r-pair plus the first diagonal-2 vector:
  //   e' = e+g, f' = f+e+g, g' = g+2f.
  const int e = 2 * ctx.params.r - 2, f = e + 1;
  const int g = 2 * (ctx.params.r + ctx.params.s) + 2 * ctx.params.t;
  Mover mv{ctx};
  mv.add(e, g, 1);
  mv.add(f, e, 1);
  mv.add(g, f, 2);
  mv.add(g, e, -2);
  ctx.params.r -= 1;
  ctx.params.s += 1;
  check_context(ctx);
  return ctx;
}

ReductionResult reduce_mod4(const SymEvenMatrix& a) {
  const int n = a.n();
  IntMatrix gram = a.matrix();
  IntMatrix wit = IntMatrix::identity(n);

  auto col_add = [&](int dst, int src, long coef) {
    gram.gram_col_add(dst, src, coef);
    wit.col_add(dst, src, coef);
  };

  // (1) symplectic reduction of A mod 2, every F2 move mirrored over Z
  F2Matrix abar = F2Matrix::from_integer(gram);
  SymplecticLayout layout =
      symplectic_reduce_f2(abar, [&](int dst, int src) { col_add(dst, src, 1); });

  // (2) sign-normalize every hyperbolic pairing to +1 mod 4
  for (auto [e, f] : layout.pairs)
    if (mod_ui(gram.at(e, f), 4) == 3) {
      gram.gram_col_negate(f);
      wit.col_negate(f);
    }

  // (3) clear residual pairings of 2 mod 4 against pair vectors
  for (auto [e, f] : layout.pairs) {
    for (int v = 0; v < n; ++v) {
      if (v == e || v == f) continue;
      if (mod_ui(gram.at(v, e), 4) == 2) col_add(v, f, 2);
      if (mod_ui(gram.at(v, f), 4) == 2) col_add(v, e, 2);
    }
  }

  // (3a) split mixed pairs: a pair with one diagonal 2 and one 0 becomes
  // hyperbolic of s type after absorbing its partner
  std::vector<std::pair<int, int>> r_pairs, s_pairs;
  for (auto [e, f] : layout.pairs) {
    int de = mod_ui(gram.at(e, e), 4);
    int df = mod_ui(gram.at(f, f), 4);
    if (de == 2 && df == 0) {
      col_add(e, f, 1);
      de = 0;
    } else if (de == 0 && df == 2) {
      col_add(f, e, 1);
      df = 0;
    }
    (de == 2 ? r_pairs : s_pairs).emplace_back(e, f);
  }

  // (3b) isolate diagonal-2 radical vectors, lowest index first; adding the
  // pivot flips diagonals further down, so rescan from the start each time
  std::vector<int> rad = layout.radical;
  std::sort(rad.begin(), rad.end());
  std::vector<int> isolated;
  while (true) {
    auto it = std::find_if(rad.begin(), rad.end(),
                           [&](int g) { return mod_ui(gram.at(g, g), 4) == 2; });
    if (it == rad.end()) break;
    const int g0 = *it;
    for (int g1 : rad)
      if (g1 != g0 && mod_ui(gram.at(g0, g1), 4) == 2) col_add(g1, g0, 1);
    isolated.push_back(g0);
    rad.erase(it);
  }

  // (4) the residual block is 2Z' with Z' mod 2 alternating; reduce it the
  // same way to split into [[0,2],[2,0]] pairs and zeros
  std::vector<int> t_cols, m_cols;
  if (!rad.empty()) {
    const int z = static_cast<int>(rad.size());
    F2Matrix zbar(z);
    for (int i = 0; i < z; ++i)
      for (int j = 0; j < z; ++j) {
        const Int& entry = gram.at(rad[i], rad[j]);
        if (mod_ui(entry, 2) != 0)
          throw InternalInconsistency("residual block has an odd entry");
        zbar.set(i, j, mod_ui(entry / 2, 2) != 0);
      }
    SymplecticLayout sub = symplectic_reduce_f2(
        zbar, [&](int dst, int src) { col_add(rad[dst], rad[src], 1); });
    for (auto [e, f] : sub.pairs) {
      t_cols.push_back(rad[e]);
      t_cols.push_back(rad[f]);
    }
    for (int x : sub.radical) m_cols.push_back(rad[x]);
  }

  // (5) one permutation into the printed block order
  std::vector<int> perm;
  perm.reserve(n);
  for (auto [e, f] : r_pairs) {
    perm.push_back(e);
    perm.push_back(f);
  }
  for (auto [e, f] : s_pairs) {
    perm.push_back(e);
    perm.push_back(f);
  }
  for (int x : t_cols) perm.push_back(x);
  for (int x : isolated) perm.push_back(x);
  for (int x : m_cols) perm.push_back(x);
  gram.gram_permute(perm);
  wit.permute_cols(perm);

  const NormalFormParams raw{static_cast<int>(r_pairs.size()), static_cast<int>(s_pairs.size()),
                             static_cast<int>(t_cols.size()) / 2, static_cast<int>(isolated.size()),
                             static_cast<int>(m_cols.size())};
  if (!equal_mod(gram, params_to_matrix(raw), 4))
    throw InternalInconsistency("pre-canonical reduction did not reach the block form");

  // (6) canonical block moves, then cross-check against the arithmetic route
  NormalFormContext ctx{raw, std::move(gram), std::move(wit)};
  while (ctx.params.p >= 3) ctx = lower_p(std::move(ctx));
  if (ctx.params.p >= 1)
    while (ctx.params.r >= 1) ctx = swap_r_to_s(std::move(ctx));
  else
    while (ctx.params.r >= 2) ctx = lower_r(std::move(ctx));

  CanonicalParams canonical = canonicalize_params(raw);
  if (!(ctx.params == canonical.params()))
    throw InternalInconsistency("matrix-level and arithmetic canonicalization disagree");

  UnimodularTransform witness(ctx.witness);
  const IntMatrix normal = params_to_matrix(canonical.params());
  const IntMatrix check = ctx.witness.transpose() * a.matrix() * ctx.witness;
  if (!(check == ctx.gram))
    throw InternalInconsistency("witness product does not reproduce the reduced Gram matrix");
  if (!equal_mod(check, normal, 4))
    throw InternalInconsistency("witness congruence does not match the normal form mod 4");
  return {canonical, std::move(witness), normal};
}

int det_mod4_classify(int n, const RadicalDims& dims) {
  if (dims.d00 >= 1) return 0;
  if (dims.d0 == 0) {
    if (n % 2 != 0)
      throw InternalInconsistency("full mod-2 rank with odd dimension is impossible");
    return n % 4 == 0 ? 1 : 3;
  }
  if (dims.d0 != 1)
    throw InternalInconsistency("dim V00 = 0 forces dim V0 <= 1");
  return 2;
}

int det_mod4_classify(const InvariantProfile& profile) {
  return det_mod4_classify(profile.n, profile.dims);
}

InvariantProfile invariant_profile(const SymEvenMatrix& a) {
  ReductionResult red = reduce_mod4(a);
  const RadicalDims dims = radical_dims(a);
  const FormClass cls = classify_form(a);
  const int det4 = mod_ui(det_exact(a.matrix()), 4);
  const NormalFormParams& c = red.params.params();

  if (c.m != dims.d000) throw InternalInconsistency("m differs from dim V000");
  if (2 * c.t + c.p + c.m != dims.d0) throw InternalInconsistency("2t+p+m differs from dim V0");
  if ((c.p - (dims.d0 - dims.d000)) % 2 != 0)
    throw InternalInconsistency("p parity differs from dim V0/V000");
  if ((c.p == 0) != (cls.radical_value == 0))
    throw InternalInconsistency("p = 0 must coincide with q(V0) = 0");
  if (c.p == 0 && c.r != *cls.arf) throw InternalInconsistency("r differs from Arf");

  InvariantProfile profile{a.n(), dims, cls, det4, red.params};
  if (det_mod4_classify(profile) != det4)
    throw InternalInconsistency("determinant classification disagrees with det mod 4");
  return profile;
}

CongruenceDecision congruent_mod4(const SymEvenMatrix& a, const SymEvenMatrix& a2) {
  if (a.n() != a2.n())
    throw ValidationError("DimensionMismatch", "congruence needs equal dimensions");
  ReductionResult red1 = reduce_mod4(a);
  ReductionResult red2 = reduce_mod4(a2);
  if (!(red1.params == red2.params)) return {false, std::nullopt};
  UnimodularTransform p = red1.witness * red2.witness.inverse();
  const IntMatrix check = p.matrix().transpose() * a.matrix() * p.matrix();
  if (!equal_mod(check, a2.matrix(), 4))
    throw InternalInconsistency("composed congruence witness failed verification");
  return {true, std::move(p)};
}

namespace {

// Mod-4 matrices for the oracle, n <= 3, row-major.
using Mod4Matrix = std::array<uint8_t, 9>;

int det_mod4_small(const Mod4Matrix& p, int n) {
  int d = 0;
  if (n == 1) {
    d = p[0];
  } else if (n == 2) {
    d = p[0] * p[3] - p[1] * p[2];
  } else {
    d = p[0] * (p[4] * p[8] - p[5] * p[7]) - p[1] * (p[3] * p[8] - p[5] * p[6]) +
        p[2] * (p[3] * p[7] - p[4] * p[6]);
  }
  return ((d % 4) + 4) % 4;
}

const std::vector<Mod4Matrix>& unimodular_mod4_table(int n) {
  static const std::array<std::vector<Mod4Matrix>, 4> tables = [] {
    std::array<std::vector<Mod4Matrix>, 4> out;
    for (int n = 1; n <= 3; ++n) {
      const int cells = n * n;
      long total = 1;
      for (int i = 0; i < cells; ++i) total *= 4;
      for (long v = 0; v < total; ++v) {
        Mod4Matrix p{};
        long rest = v;
        for (int i = 0; i < cells; ++i) {
          p[i] = static_cast<uint8_t>(rest & 3);
          rest >>= 2;
        }
        const int d = det_mod4_small(p, n);
        if (d == 1 || d == 3) out[n].push_back(p);
      }
    }
    return out;
  }();
  return tables[n];
}

Mod4Matrix to_mod4(const IntMatrix& m) {
  Mod4Matrix out{};
  const int n = m.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = static_cast<uint8_t>(mod_ui(m.at(i, j), 4));
  return out;
}

}  // namespace

bool brute_force_congruent_mod4(const SymEvenMatrix& a, const SymEvenMatrix& a2) {
  if (a.n() != a2.n())
    throw ValidationError("DimensionMismatch", "congruence needs equal dimensions");
  const int n = a.n();
  if (n > 3)
    throw PreconditionError("TooLarge", "brute force oracle is capped at n <= 3, got n = " +
                                            std::to_string(n));
  const Mod4Matrix am = to_mod4(a.matrix());
  const Mod4Matrix bm = to_mod4(a2.matrix());
  Mod4Matrix tmp{}, res{};
  for (const Mod4Matrix& p : unimodular_mod4_table(n)) {
    // tmp = A * P, res = P^T * tmp, all mod 4
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int acc = 0;
        for (int k = 0; k < n; ++k) acc += am[i * n + k] * p[k * n + j];
        tmp[i * n + j] = static_cast<uint8_t>(acc & 3);
      }
    bool match = true;
    for (int i = 0; i < n && match; ++i)
      for (int j = 0; j < n && match; ++j) {
        int acc = 0;
        for (int k = 0; k < n; ++k) acc += p[k * n + i] * tmp[k * n + j];
        res[i * n + j] = static_cast<uint8_t>(acc & 3);
        if (res[i * n + j] != bm[i * n + j]) match = false;
      }
    if (match) return true;
  }
  return false;
}

}  // namespace qcmut
