#include "qcmut/f2forms.hpp"

#include <numeric>

namespace qcmut {

const char* form_class_label(const FormClass& c) {
  if (c.radical_value) return "(iii)";
  return (c.arf && *c.arf == 1) ? "(i)" : "(ii)";
}

int f2_bilinear(const F2Matrix& g, const F2Vector& u, const F2Vector& v) {
  bool acc = false;
  for (int i = 0; i < g.n(); ++i) {
    if (!u.get(i)) continue;
    for (int j = 0; j < g.n(); ++j) acc ^= g.get(i, j) && v.get(j);
  }
  return acc ? 1 : 0;
}

F2Vector reduce_mod2(const std::vector<Int>& v) {
  F2Vector out(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out.set(static_cast<int>(i), mod_ui(v[i], 2) != 0);
  return out;
}

SymplecticLayout symplectic_reduce_f2(F2Matrix& g,
                                      const std::function<void(int, int)>& add_cb) {
  const int n = g.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  auto add = [&](int dst, int src) {
    // basis op b_dst += b_src; Gram rows and columns follow
    g.row_xor(dst, src);
    for (int r = 0; r < n; ++r) g.set(r, dst, g.get(r, dst) ^ g.get(r, src));
    if (add_cb) add_cb(dst, src);
  };

  SymplecticLayout layout;
  int pos = 0;
  while (true) {
    int vi = -1, vj = -1;
    for (int a = pos; a < n && vi < 0; ++a)
      for (int b = a + 1; b < n; ++b)
        if (g.get(order[a], order[b])) {
          vi = a;
          vj = b;
          break;
        }
    if (vi < 0) break;
    std::swap(order[pos], order[vi]);
    std::swap(order[pos + 1], order[vj]);
    const int e = order[pos];
    const int f = order[pos + 1];
    for (int w = pos + 2; w < n; ++w) {
      const int v = order[w];
      if (g.get(v, f)) add(v, e);
      if (g.get(v, e)) add(v, f);
    }
    layout.pairs.emplace_back(e, f);
    pos += 2;
  }
  layout.radical.assign(order.begin() + pos, order.end());
  return layout;
}

AlternatingReduction alternating_reduce(const F2Matrix& abar) {
  if (!abar.is_symmetric_zero_diag())
    throw ValidationError("NotAlternating",
                          "matrix must be symmetric with zero diagonal over F2");
  const int n = abar.n();
  F2Matrix work = abar;
  IntMatrix lift = IntMatrix::identity(n);
  SymplecticLayout layout = symplectic_reduce_f2(
      work, [&](int dst, int src) { lift.col_add(dst, src, 1); });

  // Materialize the discovered order so the reduced matrix is physically
  // block diagonal: pairs first, radical last.
  std::vector<int> perm;
  perm.reserve(n);
  for (auto [e, f] : layout.pairs) {
    perm.push_back(e);
    perm.push_back(f);
  }
  for (int r : layout.radical) perm.push_back(r);
  lift.permute_cols(perm);

  auto column = [&](int j) {
    std::vector<Int> v(n);
    for (int i = 0; i < n; ++i) v[i] = lift.at(i, j);
    return v;
  };

  SymplecticFrame frame{{}, {}, UnimodularTransform(lift)};
  const int k = static_cast<int>(layout.pairs.size());
  for (int i = 0; i < k; ++i) frame.pairs.emplace_back(column(2 * i), column(2 * i + 1));
  for (int i = 2 * k; i < n; ++i) frame.radical_basis.push_back(column(i));
  return {std::move(frame), k, n - 2 * k};
}

QuadraticFormF2 q_from_sym_even(const SymEvenMatrix& a) {
  const int n = a.n();
  QuadraticFormF2 form{n, F2Vector(n), F2Matrix::from_integer(a.matrix())};
  for (int i = 0; i < n; ++i) {
    Int half = a.at(i, i) / 2;
    form.basis_values.set(i, mod_ui(half, 2) != 0);
    form.gram.set(i, i, false);
  }
  return form;
}

QuadraticFormF2 q_from_skew(const SkewSymMatrix& b) {
  const int n = b.n();
  QuadraticFormF2 form{n, F2Vector(n), F2Matrix::from_integer(b.matrix())};
  for (int i = 0; i < n; ++i) form.basis_values.set(i, true);
  return form;
}

int q_eval(const QuadraticFormF2& form, const F2Vector& v) {
  if (v.n() != form.n)
    throw ValidationError("DimensionMismatch", "vector length differs from form dimension");
  bool acc = false;
  for (int i = 0; i < form.n; ++i) {
    if (!v.get(i)) continue;
    acc ^= form.basis_values.get(i);
    for (int j = i + 1; j < form.n; ++j) acc ^= v.get(j) && form.gram.get(i, j);
  }
  return acc ? 1 : 0;
}

RadicalDims radical_dims(const SymEvenMatrix& a) {
  const int n = a.n();
  const F2Matrix abar = F2Matrix::from_integer(a.matrix());
  const std::vector<F2Vector> kernel = f2_kernel_basis(abar);
  const QuadraticFormF2 form = q_from_sym_even(a);

  RadicalDims dims;
  dims.d0 = static_cast<int>(kernel.size());

  // q is linear on the radical, so q(V0) is either {0} or all of F2 and the
  // zero set has codimension at most 1.
  bool q_nonzero = false;
  for (const F2Vector& v : kernel) q_nonzero = q_nonzero || q_eval(form, v) == 1;
  dims.d00 = dims.d0 - (q_nonzero ? 1 : 0);

  // V000bar is the kernel of v -> (A vhat)/2 + im(Abar) on the 0/1 lifts.
  std::vector<F2Vector> targets;
  for (const F2Vector& v : kernel) {
    std::vector<Int> lifted = v.lift();
    F2Vector t(n);
    for (int i = 0; i < n; ++i) {
      Int acc = 0;
      for (int j = 0; j < n; ++j) acc += a.at(i, j) * lifted[j];
      t.set(i, mod_ui(acc / 2, 2) != 0);
    }
    targets.push_back(std::move(t));
  }
  dims.d000 = dims.d0 - f2_rank_increase(abar, targets);
  return dims;
}

namespace {

void check_frame(const SymplecticFrame& frame, const QuadraticFormF2& form) {
  const auto omega = [&](const std::vector<Int>& u, const std::vector<Int>& v) {
    return f2_bilinear(form.gram, reduce_mod2(u), reduce_mod2(v));
  };
  const int k = static_cast<int>(frame.pairs.size());
  if (2 * k + static_cast<int>(frame.radical_basis.size()) != form.n)
    throw PreconditionError("FrameMismatch", "frame size differs from form dimension");
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (omega(frame.pairs[i].first, frame.pairs[j].second) != (i == j ? 1 : 0) ||
          omega(frame.pairs[i].first, frame.pairs[j].first) != 0 ||
          omega(frame.pairs[i].second, frame.pairs[j].second) != 0)
        throw PreconditionError("FrameMismatch", "frame pairings are not symplectic for this form");
    }
    for (const auto& r : frame.radical_basis)
      if (omega(frame.pairs[i].first, r) != 0 || omega(frame.pairs[i].second, r) != 0)
        throw PreconditionError("FrameMismatch", "radical vector pairs non-trivially");
  }
}

}  // namespace

int arf(const SymplecticFrame& frame, const QuadraticFormF2& form) {
  check_frame(frame, form);
  for (const auto& r : frame.radical_basis)
    if (q_eval(form, reduce_mod2(r)) == 1)
      throw PreconditionError("RadicalNonzero", "Arf is undefined when q(V0) = F2");
  int acc = 0;
  for (const auto& [e, f] : frame.pairs)
    acc ^= q_eval(form, reduce_mod2(e)) & q_eval(form, reduce_mod2(f));
  return acc;
}

FormClass classify_form(const QuadraticFormF2& form) {
  AlternatingReduction red = alternating_reduce(form.gram);
  FormClass c;
  c.n = form.n;
  c.dim_radical = red.radical_dim;
  c.radical_value = 0;
  for (const auto& r : red.frame.radical_basis)
    if (q_eval(form, reduce_mod2(r)) == 1) c.radical_value = 1;
  if (c.radical_value == 0) c.arf = arf(red.frame, form);
  return c;
}

FormClass classify_form(const SymEvenMatrix& a) { return classify_form(q_from_sym_even(a)); }

bool forms_isomorphic(const FormClass& c1, const FormClass& c2) {
  if (c1.n != c2.n || c1.dim_radical != c2.dim_radical || c1.radical_value != c2.radical_value)
    return false;
  if (c1.radical_value == 0) return c1.arf == c2.arf;
  return true;
}

}  // namespace qcmut
