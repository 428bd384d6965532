// Acceptance suite: end-to-end checks of the library's headline guarantees.
// Each criterion prints one PASS/FAIL line with its runtime and the binary
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "qcmut/mutation.hpp"
#include "qcmut/normalform.hpp"
#include "support.hpp"

using namespace qcmut;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, double seconds, double limit,
            const std::string& detail = "") {
  const bool in_time = seconds <= limit;
  const bool ok = pass && in_time;
  if (!ok) ++g_failures;
  std::printf("%s criterion %d: %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", index,
              name.c_str(), seconds, limit, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
}

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

const IntMatrix kSym4{{2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, -1}, {1, 0, -1, 2}};
const IntMatrix kSym4p{{2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, 1}, {1, 0, 1, 2}};
const IntMatrix kSkew3{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
const IntMatrix kSkew3p{{0, 2, 0}, {-2, 0, 1}, {0, -1, 0}};
const IntMatrix kCompanion3{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
const IntMatrix kCompanion3p{{2, 2, 0}, {2, 2, 1}, {0, 1, 2}};

void criterion_1_worked_pair() {
  Timer timer;
  bool pass = true;
  std::string detail;
  try {
    const SymEvenMatrix a = validate_sym_even(kSym4);
    const SymEvenMatrix ap = validate_sym_even(kSym4p);
    const ReductionResult red = reduce_mod4(a);
    const ReductionResult redp = reduce_mod4(ap);
    pass = pass && red.params.params() == NormalFormParams{1, 0, 1, 0, 0};
    pass = pass && redp.params.params() == NormalFormParams{1, 0, 0, 0, 2};
    const IntMatrix& p1 = red.witness.matrix();
    const IntMatrix& p2 = redp.witness.matrix();
    pass = pass && equal_mod(p1.transpose() * a.matrix() * p1, red.normal_mod4, 4);
    pass = pass && equal_mod(p2.transpose() * ap.matrix() * p2, redp.normal_mod4, 4);
    pass = pass && !congruent_mod4(a, ap).congruent;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(1, "four-dimensional worked pair reduces to (1,0,1,0,0) and (1,0,0,0,2)", pass,
         timer.seconds(), 1.0, detail);
}

void criterion_2_delta_pair() {
  Timer timer;
  bool pass = true;
  std::string detail;
  try {
    const SkewSymMatrix b = validate_skew(kSkew3);
    const SkewSymMatrix bp = validate_skew(kSkew3p);
    pass = pass && delta(b) == 0 && delta(bp) == 2;
    pass = pass && mod_ui(det_exact(kCompanion3), 4) == 0;
    pass = pass && mod_ui(det_exact(kCompanion3p), 4) == 2;
    const DeltaDiscrepancy disc = delta_discrepancy(b, bp);
    pass = pass && disc.differs && disc.criterion_met;
    pass = pass && disc.radical_value_b == 0 && disc.radical_value_b2 == 1;
    pass = pass && !forms_isomorphic(classify_form(q_from_skew(b)),
                                     classify_form(q_from_skew(bp)));
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(2, "three-dimensional delta pair: 0 vs 2 with the radical-value criterion", pass,
         timer.seconds(), 1.0, detail);
}

void criterion_3_oracle_agreement() {
  Timer timer;
  bool pass = true;
  std::string detail;
  long pairs = 0, mismatches = 0;
  try {
    test::Rng rng(1003);
    std::vector<SymEvenMatrix> pool;
    for (int i = 0; i < 200; ++i) {
      const int n = test::uniform(rng, 1, 3);
      pool.push_back(validate_sym_even(test::random_sym_even(n, 9, rng)));
    }
    std::vector<CanonicalParams> canon;
    canon.reserve(pool.size());
    for (const SymEvenMatrix& a : pool) canon.push_back(reduce_mod4(a).params);

    // oracle answers depend on the inputs mod 4 only; memoize on that key
    std::map<std::pair<std::string, std::string>, bool> memo;
    auto oracle = [&](size_t i, size_t j) {
      std::string ki = pool[i].matrix().reduced_mod(4).to_text();
      std::string kj = pool[j].matrix().reduced_mod(4).to_text();
      if (kj < ki) std::swap(ki, kj);
      const auto key = std::make_pair(std::move(ki), std::move(kj));
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      const bool res = brute_force_congruent_mod4(pool[i], pool[j]);
      memo.emplace(key, res);
      return res;
    };

    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = i; j < pool.size(); ++j) {
        if (pool[i].n() != pool[j].n()) continue;
        ++pairs;
        const bool fast = canon[i] == canon[j];
        if (fast != oracle(i, j)) ++mismatches;
      }
    pass = mismatches == 0;
    detail = std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(3, "congruence decision agrees with the exhaustive mod-4 oracle", pass,
         timer.seconds(), 300.0, detail);
}

std::vector<SymEvenMatrix> shared_thousand() {
  test::Rng rng(1004);
  std::vector<SymEvenMatrix> out;
  out.reserve(1000);
  for (int i = 0; i < 1000; ++i) {
    const int n = test::uniform(rng, 1, 6);
    out.push_back(validate_sym_even(test::random_sym_even(n, 9, rng)));
  }
  return out;
}

void criterion_4_witness_validity(const std::vector<SymEvenMatrix>& inputs) {
  Timer timer;
  bool pass = true;
  std::string detail;
  long failures = 0;
  try {
    for (const SymEvenMatrix& a : inputs) {
      const ReductionResult red = reduce_mod4(a);
      const IntMatrix& p = red.witness.matrix();
      const Int d = det_exact(p);
      bool ok = (d == 1 || d == -1);
      ok = ok && equal_mod(p.transpose() * a.matrix() * p, red.normal_mod4, 4);
      const NormalFormParams& c = red.params.params();
      ok = ok && ((c.p == 0 && (c.r == 0 || c.r == 1)) || ((c.p == 1 || c.p == 2) && c.r == 0));
      ok = ok && c.n() == a.n();
      if (!ok) ++failures;
    }
    pass = failures == 0;
    detail = std::to_string(inputs.size()) + " inputs, " + std::to_string(failures) + " failures";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(4, "every reduction returns a verified det +/-1 witness and canonical params", pass,
         timer.seconds(), 60.0, detail);
}

void criterion_5_parameter_identities(const std::vector<SymEvenMatrix>& inputs) {
  Timer timer;
  bool pass = true;
  std::string detail;
  long failures = 0;
  try {
    for (const SymEvenMatrix& a : inputs) {
      const NormalFormParams c = reduce_mod4(a).params.params();
      const RadicalDims dims = radical_dims(a);
      const FormClass cls = classify_form(a);
      bool ok = c.m == dims.d000;
      ok = ok && 2 * c.t + c.p + c.m == dims.d0;
      ok = ok && (c.p - (dims.d0 - dims.d000)) % 2 == 0;
      ok = ok && (c.p == 0) == (cls.radical_value == 0);
      if (c.p == 0) ok = ok && cls.arf.has_value() && c.r == *cls.arf;
      if (!ok) ++failures;
    }
    pass = failures == 0;
    detail = std::to_string(failures) + " failures";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(5, "block multiplicities match the radical dimensions and Arf", pass, timer.seconds(),
         60.0, detail);
}

void criterion_6_determinant_classification(const std::vector<SymEvenMatrix>& inputs) {
  Timer timer;
  bool pass = true;
  std::string detail;
  long failures = 0;
  try {
    for (const SymEvenMatrix& a : inputs) {
      const int n = a.n();
      const int det4 = mod_ui(det_exact(a.matrix()), 4);
      bool ok = det_mod4_classify(n, radical_dims(a)) == det4;
      if (n % 4 == 0) ok = ok && (det4 == 1 || det4 == 0);
      if (n % 4 == 2) ok = ok && (det4 == 3 || det4 == 0);
      if (n % 2 == 1) ok = ok && (det4 == 0 || det4 == 2);
      if (!ok) ++failures;
    }
    pass = failures == 0;
    detail = std::to_string(failures) + " failures";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(6, "det mod 4 is classified by (n, dim V0, dim V00) and is binary", pass,
         timer.seconds(), 60.0, detail);
}

void criterion_7_mutation_invariance() {
  Timer timer;
  bool pass = true;
  std::string detail;
  long failures = 0;
  try {
    test::Rng rng(1007);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = test::uniform(rng, 1, 4);
      const SkewSymMatrix b = validate_skew(test::random_skew(n, 3, rng));
      const ClassScanReport rep = scan_class(b, 5, 500);
      bool ok = rep.delta_values.size() == 1;
      ok = ok && rep.form_classes.size() == 1;
      ok = ok && rep.companion_det_mod4.size() == 1;
      ok = ok && rep.involution_violations == 0;
      if (!ok) ++failures;
    }
    pass = failures == 0;
    detail = std::to_string(failures) + " failures";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(7, "scanned mutation classes have constant delta, form class and companion det", pass,
         timer.seconds(), 300.0, detail);
}

void criterion_8_congruence_invariance() {
  Timer timer;
  bool pass = true;
  std::string detail;
  long failures = 0;
  try {
    test::Rng rng(1008);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = test::uniform(rng, 1, 6);
      const SymEvenMatrix a = validate_sym_even(test::random_sym_even(n, 9, rng));
      const UnimodularTransform p(test::random_unimodular(n, 10, rng));
      const SymEvenMatrix image = congruence_apply(a, p);
      bool ok = reduce_mod4(image).params == reduce_mod4(a).params;
      ok = ok && classify_form(image) == classify_form(a);
      if (!ok) ++failures;
    }
    pass = failures == 0;
    detail = std::to_string(failures) + " failures";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(8, "canonical params and form class are congruence invariants", pass, timer.seconds(),
         60.0, detail);
}

}  // namespace

int main() {
  criterion_1_worked_pair();
  criterion_2_delta_pair();
  criterion_3_oracle_agreement();
  const std::vector<SymEvenMatrix> inputs = shared_thousand();
  criterion_4_witness_validity(inputs);
  criterion_5_parameter_identities(inputs);
  criterion_6_determinant_classification(inputs);
  criterion_7_mutation_invariance();
  criterion_8_congruence_invariance();
  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
