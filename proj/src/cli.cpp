#include "qcmut/cli.hpp"

#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcmut/io.hpp"
#include "qcmut/mutation.hpp"
#include "qcmut/normalform.hpp"

namespace qcmut::cli {

namespace {

using nlohmann::json;

json params_to_report(const NormalFormParams& p) {
  return json{{"r", p.r}, {"s", p.s}, {"t", p.t}, {"p", p.p}, {"m", p.m}};
}

json form_class_to_report(const FormClass& c) {
  json j{{"n", c.n},
         {"dim_radical", c.dim_radical},
         {"radical_value", c.radical_value},
         {"label", form_class_label(c)}};
  j["arf"] = c.arf ? json(*c.arf) : json(nullptr);
  return j;
}

std::string params_line(const NormalFormParams& p) {
  std::ostringstream os;
  os << "r=" << p.r << " s=" << p.s << " t=" << p.t << " p=" << p.p << " m=" << p.m;
  return os.str();
}

void emit(const json& report, bool as_json, std::ostream& out,
          const std::function<void(std::ostream&)>& human) {
  if (as_json)
    out << report.dump(2) << '\n';
  else
    human(out);
}

int cmd_normal_form(const std::string& file, bool as_json, std::ostream& out) {
  const SymEvenMatrix a = validate_sym_even(load_matrix_arg(file));
  const ReductionResult red = reduce_mod4(a);
  const IntMatrix& p = red.witness.matrix();
  const bool verified =
      equal_mod(p.transpose() * a.matrix() * p, red.normal_mod4, 4);
  json report{{"command", "normal-form"},
              {"n", a.n()},
              {"input", matrix_to_json(a.matrix())},
              {"params", params_to_report(red.params.params())},
              {"witness", matrix_to_json(p)},
              {"witness_det", red.witness.det_sign()},
              {"normal_mod4", matrix_to_json(red.normal_mod4)},
              {"witness_verified", verified}};
  emit(report, as_json, out, [&](std::ostream& os) {
    os << "n: " << a.n() << '\n';
    os << "params: " << params_line(red.params.params()) << '\n';
    os << "normal form (mod 4):\n" << red.normal_mod4;
    os << "witness P (det " << (red.witness.det_sign() > 0 ? "+1" : "-1") << "):\n" << p;
    os << "verified: P^T A P = normal form (mod 4): " << (verified ? "yes" : "NO") << '\n';
  });
  return verified ? 0 : 1;
}

int cmd_invariants(const std::string& file, bool as_json, std::ostream& out) {
  const SymEvenMatrix a = validate_sym_even(load_matrix_arg(file));
  const InvariantProfile prof = invariant_profile(a);
  json report{{"command", "invariants"},
              {"n", prof.n},
              {"radical_dims",
               json{{"d0", prof.dims.d0}, {"d00", prof.dims.d00}, {"d000", prof.dims.d000}}},
              {"form_class", form_class_to_report(prof.form_class)},
              {"det_mod4", prof.det_mod4},
              {"det_mod4_classified", det_mod4_classify(prof)},
              {"params", params_to_report(prof.canonical.params())}};
  emit(report, as_json, out, [&](std::ostream& os) {
    os << "n: " << prof.n << '\n';
    os << "radical dims: d0=" << prof.dims.d0 << " d00=" << prof.dims.d00
       << " d000=" << prof.dims.d000 << '\n';
    os << "form class: " << form_class_label(prof.form_class);
    if (prof.form_class.arf) os << " (Arf=" << *prof.form_class.arf << ")";
    os << '\n';
    os << "det mod 4: " << prof.det_mod4 << " (classified: " << det_mod4_classify(prof) << ")\n";
    os << "canonical params: " << params_line(prof.canonical.params()) << '\n';
  });
  return 0;
}

int cmd_congruent(const std::string& file_a, const std::string& file_b, bool oracle,
                  bool as_json, std::ostream& out) {
  const SymEvenMatrix a = validate_sym_even(load_matrix_arg(file_a));
  const SymEvenMatrix b = validate_sym_even(load_matrix_arg(file_b));
  json report{{"command", "congruent"}, {"method", oracle ? "oracle" : "canonical"}};
  bool congruent = false;
  std::optional<UnimodularTransform> witness;
  if (oracle) {
    congruent = brute_force_congruent_mod4(a, b);
  } else {
    CongruenceDecision dec = congruent_mod4(a, b);
    congruent = dec.congruent;
    witness = std::move(dec.witness);
    report["canonical_a"] = params_to_report(reduce_mod4(a).params.params());
    report["canonical_b"] = params_to_report(reduce_mod4(b).params.params());
  }
  report["congruent"] = congruent;
  bool verified = false;
  if (witness) {
    const IntMatrix& p = witness->matrix();
    verified = equal_mod(p.transpose() * a.matrix() * p, b.matrix(), 4);
    report["witness"] = matrix_to_json(p);
    report["witness_verified"] = verified;
  } else {
    report["witness"] = nullptr;
  }
  emit(report, as_json, out, [&](std::ostream& os) {
    os << "congruent (mod 4): " << (congruent ? "true" : "false") << '\n';
    if (witness) {
      os << "witness P:\n" << witness->matrix();
      os << "verified: P^T A P = A' (mod 4): " << (verified ? "yes" : "NO") << '\n';
    }
  });
  return (witness && !verified) ? 1 : 0;
}

int cmd_mutate(const std::string& file, const std::vector<int>& seq, bool as_json,
               std::ostream& out) {
  const SkewSymMatrix b = validate_skew(load_matrix_arg(file));
  const SkewSymMatrix result = mutate_seq(b, MutationSequence{seq});
  json report{{"command", "mutate"},
              {"sequence", seq},
              {"result", matrix_to_json(result.matrix())}};
  emit(report, as_json, out, [&](std::ostream& os) { os << result.matrix(); });
  return 0;
}

int cmd_companion(const std::string& file, const std::string& signs_file, bool as_json,
                  std::ostream& out) {
  const SkewSymMatrix b = validate_skew(load_matrix_arg(file));
  const SymEvenMatrix a =
      signs_file.empty()
          ? standard_companion(b)
          : companion_with_signs(b, SignChoice::from_matrix(load_matrix_arg(signs_file)));
  json report{{"command", "companion"}, {"result", matrix_to_json(a.matrix())}};
  emit(report, as_json, out, [&](std::ostream& os) { os << a.matrix(); });
  return 0;
}

int cmd_delta(const std::string& file, bool as_json, std::ostream& out) {
  const SkewSymMatrix b = validate_skew(load_matrix_arg(file));
  const int d = delta(b);
  json report{{"command", "delta"}, {"delta", d}};
  emit(report, as_json, out, [&](std::ostream& os) { os << "delta: " << d << '\n'; });
  return 0;
}

int cmd_scan(const std::string& file, int depth, long max_nodes, uint64_t seed, bool as_json,
             std::ostream& out) {
  const SkewSymMatrix b = validate_skew(load_matrix_arg(file));
  const ClassScanReport rep = scan_class(b, depth, max_nodes, seed);
  json classes = json::array();
  for (const FormClass& c : rep.form_classes) classes.push_back(form_class_to_report(c));
  json report{{"command", "scan"},
              {"visited", rep.visited},
              {"depth_reached", rep.depth_reached},
              {"truncated", rep.truncated},
              {"delta_values", rep.delta_values},
              {"form_classes", classes},
              {"companion_det_mod4", rep.companion_det_mod4},
              {"involution_violations", rep.involution_violations}};
  emit(report, as_json, out, [&](std::ostream& os) {
    os << "visited: " << rep.visited << " (depth " << rep.depth_reached
       << (rep.truncated ? ", truncated" : ", complete") << ")\n";
    os << "delta values:";
    for (int d : rep.delta_values) os << ' ' << d;
    os << "\nform classes:";
    for (const FormClass& c : rep.form_classes) os << ' ' << form_class_label(c);
    os << "\ncompanion det mod 4:";
    for (int d : rep.companion_det_mod4) os << ' ' << d;
    os << "\ninvolution violations: " << rep.involution_violations << '\n';
  });
  return 0;
}

int cmd_selftest(bool as_json, std::ostream& out) {
  struct Check {
    std::string name;
    bool pass;
  };
  std::vector<Check> checks;
  auto check = [&](const std::string& name, bool pass) { checks.push_back({name, pass}); };

  // The worked four-dimensional pair: two companions of one skew matrix with
  // distinct m parameters.
  const IntMatrix a4{{2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, -1}, {1, 0, -1, 2}};
  const IntMatrix a4p{{2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, 1}, {1, 0, 1, 2}};
  const IntMatrix p4{{1, 0, -1, 2}, {0, 1, 2, -1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const SymEvenMatrix A = validate_sym_even(a4);
  const SymEvenMatrix Ap = validate_sym_even(a4p);
  {
    const ReductionResult red = reduce_mod4(A);
    check("normal form of A has (r,s,t,p,m) = (1,0,1,0,0)",
          red.params.params() == NormalFormParams{1, 0, 1, 0, 0});
    const ReductionResult redp = reduce_mod4(Ap);
    check("normal form of A' has (r,s,t,p,m) = (1,0,0,0,2)",
          redp.params.params() == NormalFormParams{1, 0, 0, 0, 2});
    check("A and A' are not congruent mod 4", !congruent_mod4(A, Ap).congruent);
    const UnimodularTransform P(p4);
    const IntMatrix expected{{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}};
    check("printed witness sends A to its normal form",
          equal_mod(congruence_apply(A, P).matrix(), expected, 4));
  }

  // The three-dimensional delta example.
  const SkewSymMatrix B = validate_skew(IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  const SkewSymMatrix Bp = validate_skew(IntMatrix{{0, 2, 0}, {-2, 0, 1}, {0, -1, 0}});
  {
    check("delta(B) = 0", delta(B) == 0);
    check("delta(B') = 2", delta(Bp) == 2);
    const SymEvenMatrix cb = validate_sym_even(IntMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
    const SymEvenMatrix cbp = validate_sym_even(IntMatrix{{2, 2, 0}, {2, 2, 1}, {0, 1, 2}});
    check("det of the first companion is 0 mod 4", mod_ui(det_exact(cb.matrix()), 4) == 0);
    check("det of the second companion is 2 mod 4", mod_ui(det_exact(cbp.matrix()), 4) == 2);
    const DeltaDiscrepancy disc = delta_discrepancy(B, Bp);
    check("delta discrepancy detected with its criterion", disc.differs && disc.criterion_met);
    check("Q_B and Q_B' are not isomorphic",
          !forms_isomorphic(classify_form(q_from_skew(B)), classify_form(q_from_skew(Bp))));
    check("companion form coincides with Q_B", companion_q_coincidence(B, cb));
  }

  // Decision procedure versus the exhaustive oracle on a spread of small
  // matrices.
  {
    const std::vector<IntMatrix> pool{
        IntMatrix{{2}},          IntMatrix{{0}},
        IntMatrix{{2, 1}, {1, 2}}, IntMatrix{{0, 1}, {1, 0}},
        IntMatrix{{2, 0}, {0, 2}}, IntMatrix{{0, 0}, {0, 0}},
        IntMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}},
        IntMatrix{{2, 2, 0}, {2, 2, 1}, {0, 1, 2}},
        IntMatrix{{0, 3, 1}, {3, 2, -2}, {1, -2, 4}},
        IntMatrix{{-2, 1, 1}, {1, 0, 5}, {1, 5, 6}}};
    bool all_agree = true;
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = i; j < pool.size(); ++j) {
        if (pool[i].n() != pool[j].n()) continue;
        const SymEvenMatrix x = validate_sym_even(pool[i]);
        const SymEvenMatrix y = validate_sym_even(pool[j]);
        if (congruent_mod4(x, y).congruent != brute_force_congruent_mod4(x, y))
          all_agree = false;
      }
    check("decision procedure agrees with the exhaustive oracle", all_agree);
  }

  bool all_pass = true;
  json jchecks = json::array();
  for (const Check& c : checks) {
    all_pass = all_pass && c.pass;
    jchecks.push_back(json{{"name", c.name}, {"pass", c.pass}});
  }
  json report{{"command", "selftest"}, {"checks", jchecks}, {"all_pass", all_pass}};
  emit(report, as_json, out, [&](std::ostream& os) {
    for (const Check& c : checks) os << (c.pass ? "ok   " : "FAIL ") << c.name << '\n';
    os << (all_pass ? "selftest passed" : "selftest FAILED") << '\n';
  });
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mod-4 congruence normal forms, quadratic-form invariants and "
               "mutation invariants of integer matrices"};
  app.require_subcommand(1);

  std::string file_a, file_b, signs_file;
  std::vector<int> seq;
  int depth = 6;
  long max_nodes = 10000;
  uint64_t seed = kScanDefaultSeed;
  bool as_json = false, oracle = false, verify_witness = false;

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit the structured report");
  };

  CLI::App* normal = app.add_subcommand("normal-form", "canonical mod-4 normal form with witness");
  normal->add_option("matrix", file_a, "matrix file, '-' or inline")->required();
  add_json(normal);

  CLI::App* invariants = app.add_subcommand("invariants", "radical dims, form class, det mod 4");
  invariants->add_option("matrix", file_a)->required();
  add_json(invariants);

  CLI::App* congruent = app.add_subcommand("congruent", "decide mod-4 congruence of two matrices");
  congruent->add_option("matrix_a", file_a)->required();
  congruent->add_option("matrix_b", file_b)->required();
  congruent->add_flag("--oracle", oracle, "force the exhaustive oracle (n <= 3)");
  congruent->add_flag("--verify-witness", verify_witness,
                      "recompute P^T A P mod 4 and confirm (always reported)");
  add_json(congruent);

  CLI::App* mutate_cmd = app.add_subcommand("mutate", "apply a mutation sequence");
  mutate_cmd->add_option("matrix", file_a)->required();
  mutate_cmd->add_option("--seq", seq, "comma-separated 1-based directions")
      ->required()
      ->delimiter(',');
  add_json(mutate_cmd);

  CLI::App* companion = app.add_subcommand("companion", "quasi-Cartan companion");
  companion->add_option("matrix", file_a)->required();
  companion->add_option("--signs", signs_file, "symmetric +/-1 sign matrix file");
  add_json(companion);

  CLI::App* delta_cmd = app.add_subcommand("delta", "det of the standard companion mod 4");
  delta_cmd->add_option("matrix", file_a)->required();
  add_json(delta_cmd);

  CLI::App* scan = app.add_subcommand("scan", "breadth-first mutation-class invariant scan");
  scan->add_option("matrix", file_a)->required();
  scan->add_option("--depth", depth, "maximum mutation depth");
  scan->add_option("--max-nodes", max_nodes, "maximum number of distinct matrices");
  scan->add_option("--seed", seed, "seed for companion sign sampling");
  add_json(scan);

  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in worked examples");
  add_json(selftest);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (normal->parsed()) return cmd_normal_form(file_a, as_json, out);
    if (invariants->parsed()) return cmd_invariants(file_a, as_json, out);
    if (congruent->parsed()) return cmd_congruent(file_a, file_b, oracle, as_json, out);
    if (mutate_cmd->parsed()) return cmd_mutate(file_a, seq, as_json, out);
    if (companion->parsed()) return cmd_companion(file_a, signs_file, as_json, out);
    if (delta_cmd->parsed()) return cmd_delta(file_a, as_json, out);
    if (scan->parsed()) return cmd_scan(file_a, depth, max_nodes, seed, as_json, out);
    if (selftest->parsed()) return cmd_selftest(as_json, out);
  } catch (const Error& e) {
    err << e.code() << ": " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "BadJson: " << e.what() << '\n';
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace qcmut::cli
