#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rvl/decide.hpp"
#include "rvl/luk.hpp"
#include "rvl/proofs.hpp"
#include "rvl/regions.hpp"
#include "rvl/syntax.hpp"

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string model_line(const rvl::Model& m) {
  std::string out = "MODEL ";
  bool first = true;
  for (const auto& [name, value] : m.assignment()) {
    if (!first) out += ", ";
    out += name + " = " + value.str();
    first = false;
  }
  return out;
}

void print_branches(const std::vector<rvl::BranchOutcome>& branches) {
  for (const auto& br : branches) {
    std::cout << "BRANCH <" << br.signs << "> ";
    if (br.verdict.kind == rvl::LinearVerdict::Kind::entailed) {
      std::cout << rvl::print_certificate(br.verdict.certificate.multipliers) << "\n";
    } else {
      std::cout << "INFEASIBLE "
                << rvl::print_certificate(br.verdict.infeasibility.multipliers) << "\n";
    }
  }
}

struct CommonOpts {
  bool extended = false;
  rvl::Mode mode() const { return extended ? rvl::Mode::extended : rvl::Mode::basic; }
};

int run(int argc, char** argv) {
  CLI::App app{"R-valued propositional logic toolkit"};
  app.require_subcommand(1);

  CommonOpts common;
  bool parallel = false;
  bool want_cert = false, want_model = false;

  auto* cmd_decide = app.add_subcommand("decide", "decide finite-theory entailment");
  std::string theory_path, goal_text;
  cmd_decide->add_option("--theory", theory_path, "theory file (one inequality per line)");
  cmd_decide->add_option("--goal", goal_text, "goal inequality")->required();
  cmd_decide->add_flag("--extended", common.extended, "extended mode");
  cmd_decide->add_flag("--parallel", parallel, "solve branches concurrently");
  cmd_decide->add_flag("--certificate", want_cert, "print per-branch certificates");
  cmd_decide->add_flag("--countermodel", want_model, "print the countermodel");

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula in a model");
  std::string model_path, formula_text;
  cmd_eval->add_option("--model", model_path, "model file (letter = rational lines)")->required();
  cmd_eval->add_option("--formula", formula_text, "formula")->required();
  cmd_eval->add_flag("--extended", common.extended, "extended mode");

  auto* cmd_norm = app.add_subcommand("normalize", "normal form of a meet-free formula");
  cmd_norm->add_option("--formula", formula_text, "formula")->required();
  cmd_norm->add_flag("--extended", common.extended, "extended mode");

  auto* cmd_regions = app.add_subcommand("regions", "sign case split into guarded linear pieces");
  bool prune = false;
  cmd_regions->add_option("--formula", formula_text, "formula")->required();
  cmd_regions->add_flag("--extended", common.extended, "extended mode");
  cmd_regions->add_flag("--prune", prune, "drop pieces with infeasible guards");

  auto* cmd_check = app.add_subcommand("check-proof", "check a proof file");
  std::string proof_path;
  cmd_check->add_option("proof", proof_path, "proof file")->required();

  auto* cmd_transform = app.add_subcommand("transform", "deduction-theorem transforms");
  std::string pos_path, neg_path;
  std::size_t hyp_number = 0, neg_hyp_number = 0;
  bool do_cut = false;
  cmd_transform->add_option("proof", proof_path, "proof file")->required();
  cmd_transform->add_option("--hyp", hyp_number, "designated hypothesis number (1-based)")
      ->required();
  cmd_transform->add_flag("--cut", do_cut, "cut-eliminate against a second proof");
  cmd_transform->add_option("--neg", neg_path, "proof from the negated hypothesis (with --cut)");
  cmd_transform->add_option("--neg-hyp", neg_hyp_number,
                            "designated hypothesis number in the second proof");

  auto* cmd_consistent = app.add_subcommand("consistent", "consistency report for a theory");
  cmd_consistent->add_option("--theory", theory_path, "theory file");
  cmd_consistent->add_flag("--extended", common.extended, "extended mode");
  cmd_consistent->add_flag("--certificate", want_cert, "print certificates when inconsistent");
  cmd_consistent->add_flag("--countermodel", want_model, "print a witness model");

  auto* cmd_luk = app.add_subcommand("luk", "Lukasiewicz validity");
  std::string convention = "luk";
  cmd_luk->add_option("--formula", formula_text, "Lukasiewicz formula")->required();
  cmd_luk->add_option("--convention", convention, "luk (truth = 1) or cont (truth = 0)")
      ->check(CLI::IsMember({"luk", "cont"}));
  cmd_luk->add_flag("--countermodel", want_model, "print a countermodel");

  CLI11_PARSE(app, argc, argv);

  if (cmd_decide->parsed()) {
    rvl::Theory t;
    if (!theory_path.empty()) t = rvl::parse_theory(read_file(theory_path), common.mode());
    rvl::Inequality goal = rvl::parse_inequality(goal_text, common.mode());
    rvl::Verdict v = rvl::decide(t, goal, common.mode(), rvl::DecideOptions{parallel});
    if (v.kind == rvl::Verdict::Kind::entails) {
      std::cout << "RESULT entailed\n";
      if (want_cert) print_branches(v.branches);
      return kExitPositive;
    }
    std::cout << "RESULT not-entailed\n";
    if (want_model) std::cout << model_line(*v.countermodel) << "\n";
    return kExitNegative;
  }

  if (cmd_eval->parsed()) {
    rvl::Model m(rvl::parse_model_file(read_file(model_path)), common.mode());
    rvl::Formula f = rvl::parse_formula(formula_text, common.mode());
    std::cout << "VALUE " << rvl::eval(f, m).str() << "\n";
    return kExitPositive;
  }

  if (cmd_norm->parsed()) {
    rvl::Formula f = rvl::parse_formula(formula_text, common.mode());
    rvl::LinearForm lf = rvl::linearize(f);
    std::cout << "VALUE " << rvl::print_formula(rvl::lf_to_formula(lf)) << "\n";
    return kExitPositive;
  }

  if (cmd_regions->parsed()) {
    rvl::Formula f = rvl::parse_formula(formula_text, common.mode());
    rvl::RegionDecomposition rd = rvl::decompose(f, prune);
    std::cout << "RESULT " << rd.pieces.size() << "\n";
    for (const auto& piece : rd.pieces) {
      std::cout << "GUARDS ";
      for (std::size_t i = 0; i < piece.guards.size(); ++i) {
        if (i) std::cout << "; ";
        std::cout << rvl::print_formula(rvl::lf_to_formula(piece.guards[i]));
      }
      std::cout << " => VALUE " << rvl::print_formula(rvl::lf_to_formula(piece.value)) << "\n";
    }
    return kExitPositive;
  }

  if (cmd_check->parsed()) {
    rvl::Derivation d = rvl::parse_proof_file(read_file(proof_path));
    rvl::CheckResult res = rvl::check(d);
    if (res.ok) {
      std::cout << "PROOF ok\n";
      return kExitPositive;
    }
    std::cout << "PROOF rejected step " << (res.step + 1) << ": " << res.reason << "\n";
    return kExitNegative;
  }

  if (cmd_transform->parsed()) {
    rvl::Derivation d = rvl::parse_proof_file(read_file(proof_path));
    if (hyp_number == 0 || hyp_number > d.theory.size())
      throw std::runtime_error("--hyp out of range");
    if (do_cut) {
      if (neg_path.empty() || neg_hyp_number == 0)
        throw std::runtime_error("--cut needs --neg FILE and --neg-hyp K");
      rvl::Derivation dn = rvl::parse_proof_file(read_file(neg_path));
      if (neg_hyp_number > dn.theory.size()) throw std::runtime_error("--neg-hyp out of range");
      rvl::Derivation out = rvl::cut_eliminate(d, hyp_number - 1, dn, neg_hyp_number - 1);
      std::cout << "PROOF ok\n" << rvl::print_proof_file(out);
      return kExitPositive;
    }
    rvl::DeductionResult out = rvl::deduction_transform(d, hyp_number - 1);
    std::cout << "PROOF ok r=" << out.r.str() << "\n" << rvl::print_proof_file(out.derivation);
    return kExitPositive;
  }

  if (cmd_consistent->parsed()) {
    rvl::Theory t;
    if (!theory_path.empty()) t = rvl::parse_theory(read_file(theory_path), common.mode());
    rvl::ConsistencyReport report = rvl::consistent(t, common.mode());
    if (!report.consistent) {
      std::cout << "RESULT inconsistent\n";
      if (want_cert) print_branches(report.branches);
      return kExitNegative;
    }
    std::cout << "RESULT consistent\n";
    if (common.mode() == rvl::Mode::extended) {
      if (want_model && report.witness) std::cout << model_line(*report.witness) << "\n";
    } else {
      for (const auto& [name, forced] : report.forced_zero)
        std::cout << "LETTER " << name << " " << (forced ? "zero-forced" : "free") << "\n";
    }
    return kExitPositive;
  }

  if (cmd_luk->parsed()) {
    rvl::LukFormula f = rvl::parse_luk(formula_text);
    rvl::LukConvention conv =
        convention == "luk" ? rvl::LukConvention::luk : rvl::LukConvention::cont;
    rvl::Verdict v = rvl::luk_valid(f, conv);
    if (v.kind == rvl::Verdict::Kind::entails) {
      std::cout << "RESULT valid\n";
      return kExitPositive;
    }
    std::cout << "RESULT not-valid\n";
    if (want_model) std::cout << model_line(*v.countermodel) << "\n";
    return kExitNegative;
  }

  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rvl::ParseError& e) {
    std::cerr << "error (line " << e.span.line << ", column " << e.span.column
              << "): " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
