#include "qcmut/mutation.hpp"

#include <map>
#include <random>

namespace qcmut {

SignChoice SignChoice::all_plus(int n) { return SignChoice(n); }

SignChoice SignChoice::all_minus(int n) {
  SignChoice s(n);
  for (auto& v : s.e_) v = -1;
  return s;
}

SignChoice SignChoice::from_matrix(const IntMatrix& m) {
  SignChoice s(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      if (i == j) continue;
      if (m.at(i, j) != 1 && m.at(i, j) != -1)
        throw ValidationError("BadSign", "sign entries must be +1 or -1");
      if (m.at(i, j) != m.at(j, i))
        throw ValidationError("NotSymmetric", "sign choice must be symmetric");
      s.e_[static_cast<size_t>(i) * m.n() + j] = static_cast<int8_t>(m.at(i, j).get_si());
    }
  return s;
}

void SignChoice::set(int i, int j, int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("BadSign", "sign must be +1 or -1");
  e_[static_cast<size_t>(i) * n_ + j] = static_cast<int8_t>(sign);
  e_[static_cast<size_t>(j) * n_ + i] = static_cast<int8_t>(sign);
}

namespace {

Int positive_part(const Int& x) { return x > 0 ? x : Int(0); }

}  // namespace

SkewSymMatrix mutate(const SkewSymMatrix& b, int k) {
  const int n = b.n();
  if (k < 1 || k > n)
    throw ValidationError("IndexOutOfRange",
                          "mutation direction must be in 1.." + std::to_string(n));
  const int kk = k - 1;
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == kk || j == kk)
        out.at(i, j) = -b.at(i, j);
      else
        out.at(i, j) = b.at(i, j) + positive_part(b.at(i, kk)) * positive_part(b.at(kk, j)) -
                       positive_part(-b.at(i, kk)) * positive_part(-b.at(kk, j));
    }
  return validate_skew(out);
}

SkewSymMatrix mutate_seq(const SkewSymMatrix& b, const MutationSequence& seq) {
  SkewSymMatrix cur = b;
  for (int k : seq.directions) cur = mutate(cur, k);
  return cur;
}

SymEvenMatrix standard_companion(const SkewSymMatrix& b) {
  const int n = b.n();
  IntMatrix out(n);
  for (int i = 0; i < n; ++i) {
    out.at(i, i) = 2;
    for (int j = i + 1; j < n; ++j) {
      out.at(i, j) = b.at(i, j);
      out.at(j, i) = b.at(i, j);
    }
  }
  return validate_sym_even(out);
}

SymEvenMatrix companion_with_signs(const SkewSymMatrix& b, const SignChoice& eps) {
  if (eps.n() != b.n())
    throw ValidationError("DimensionMismatch", "sign choice dimension differs from matrix");
  const int n = b.n();
  IntMatrix out(n);
  for (int i = 0; i < n; ++i) {
    out.at(i, i) = 2;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Int mag = abs(b.at(i, j));
      out.at(i, j) = eps.at(i, j) > 0 ? mag : Int(-mag);
    }
  }
  return validate_sym_even(out);
}

bool is_companion(const SymEvenMatrix& a, const SkewSymMatrix& b) {
  if (a.n() != b.n())
    throw ValidationError("DimensionMismatch", "companion check needs equal dimensions");
  for (int i = 0; i < a.n(); ++i) {
    if (a.at(i, i) != 2) return false;
    for (int j = 0; j < a.n(); ++j)
      if (i != j && abs(a.at(i, j)) != abs(b.at(i, j))) return false;
  }
  return true;
}

int delta(const SkewSymMatrix& b) {
  return mod_ui(det_exact(standard_companion(b).matrix()), 4);
}

namespace {

int radical_value_of(const QuadraticFormF2& form) {
  for (const F2Vector& v : f2_kernel_basis(form.gram))
    if (q_eval(form, v) == 1) return 1;
  return 0;
}

}  // namespace

DeltaDiscrepancy delta_discrepancy(const SkewSymMatrix& b, const SkewSymMatrix& b2) {
  if (b.n() != b2.n())
    throw ValidationError("DimensionMismatch", "delta comparison needs equal dimensions");
  const int n = b.n();
  const int rank1 = f2_rank(F2Matrix::from_integer(b.matrix()));
  const int rank2 = f2_rank(F2Matrix::from_integer(b2.matrix()));
  if (rank1 != rank2)
    throw ValidationError("RankMismatch", "mod-2 ranks differ: " + std::to_string(rank1) +
                                              " vs " + std::to_string(rank2));

  DeltaDiscrepancy out;
  out.rank = rank1;
  out.differs = delta(b) != delta(b2);
  out.radical_value_b = radical_value_of(q_from_skew(b));
  out.radical_value_b2 = radical_value_of(q_from_skew(b2));
  out.criterion_met =
      n % 2 == 1 && rank1 == n - 1 && out.radical_value_b != out.radical_value_b2;
  if (out.differs != out.criterion_met)
    throw InternalInconsistency("delta discrepancy disagrees with its rank/radical criterion");

  auto value_set = [](int rv) { return rv ? std::string("F2") : std::string("{0}"); };
  if (out.criterion_met)
    out.explanation = "criterion met: n odd, rank n-1, Q_B(V0) = " +
                      value_set(out.radical_value_b) + " differs from Q_B'(V0) = " +
                      value_set(out.radical_value_b2);
  else
    out.explanation =
        "criterion not met: " +
        std::string(n % 2 == 0       ? "n is even"
                    : rank1 != n - 1 ? "rank is not n-1"
                                     : "Q values on the radicals coincide (both " +
                                           value_set(out.radical_value_b) + ")");
  return out;
}

bool companion_q_coincidence(const SkewSymMatrix& b, const SymEvenMatrix& a) {
  if (!is_companion(a, b))
    throw PreconditionError("NotACompanion", "matrix is not a quasi-Cartan companion of B");
  return q_from_skew(b) == q_from_sym_even(a);
}

ClassScanReport scan_class(const SkewSymMatrix& b, int max_depth, long max_nodes,
                           uint64_t seed) {
  if (max_depth < 0) throw ValidationError("BadBounds", "max_depth must be >= 0");
  if (max_nodes < 1) throw ValidationError("BadBounds", "max_nodes must be >= 1");
  const int n = b.n();
  std::mt19937_64 rng(seed);
  ClassScanReport report;

  auto key_of = [](const SkewSymMatrix& m) { return m.matrix().to_text(); };

  auto record = [&](const SkewSymMatrix& node) {
    report.delta_values.insert(delta(node));
    report.form_classes.insert(classify_form(q_from_skew(node)));
    std::vector<SignChoice> samples{SignChoice::all_plus(n), SignChoice::all_minus(n)};
    for (int i = 0; i < 8; ++i) {
      SignChoice sc = SignChoice::all_plus(n);
      for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) sc.set(a, c, (rng() & 1) ? 1 : -1);
      samples.push_back(std::move(sc));
    }
    for (const SignChoice& sc : samples) {
      const SymEvenMatrix comp = companion_with_signs(node, sc);
      report.companion_det_mod4.insert(mod_ui(det_exact(comp.matrix()), 4));
    }
  };

  std::vector<SkewSymMatrix> nodes{b};
  std::vector<int> depth_of{0};
  std::vector<bool> expanded{false};
  std::map<std::string, size_t> visited{{key_of(b), 0}};
  record(b);

  bool cap_hit = false;
  size_t head = 0;
  while (head < nodes.size() && !cap_hit) {
    const size_t cur = head++;
    if (depth_of[cur] >= max_depth) continue;
    expanded[cur] = true;
    for (int k = 1; k <= n; ++k) {
      const SkewSymMatrix child = mutate(nodes[cur], k);
      if (!(mutate(child, k) == nodes[cur])) ++report.involution_violations;
      const std::string ck = key_of(child);
      if (visited.count(ck)) continue;
      if (static_cast<long>(nodes.size()) >= max_nodes) {
        cap_hit = true;
        expanded[cur] = false;
        break;
      }
      visited.emplace(ck, nodes.size());
      nodes.push_back(child);
      depth_of.push_back(depth_of[cur] + 1);
      expanded.push_back(false);
      record(child);
    }
  }

  report.visited = static_cast<long>(nodes.size());
  for (int d : depth_of) report.depth_reached = std::max(report.depth_reached, d);

  // Truncated means the visited set is provably not the whole class: some
  // unexpanded node still has a neighbour outside the set.
  for (size_t i = 0; i < nodes.size() && !report.truncated; ++i) {
    if (expanded[i]) continue;
    for (int k = 1; k <= n && !report.truncated; ++k)
      if (!visited.count(key_of(mutate(nodes[i], k)))) report.truncated = true;
  }
  return report;
}

}  // namespace qcmut
