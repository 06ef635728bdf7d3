#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nilclean/canonical.hpp"
#include "nilclean/cnf.hpp"
#include "nilclean/gf2_matrix.hpp"
#include "nilclean/gf2_poly.hpp"
#include "nilclean/io.hpp"
#include "nilclean/nc_poly.hpp"
#include "nilclean/search.hpp"
#include "nilclean/version.hpp"

namespace {

using namespace nilclean;

// Exit codes: 0 found/verified/holds, 1 proven-none/refuted, 2
// unknown/exported, 64 usage, 65 bad data, 66 missing file, 70 internal
// error.
constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoFile = 66;
constexpr int kExitInternal = 70;

int report_exit_code(const SearchReport& r) {
  switch (r.status) {
    case SearchStatus::kFound:
      return kExitHolds;
    case SearchStatus::kExhaustedNone:
      return kExitRefuted;
    case SearchStatus::kExported:
    case SearchStatus::kUnknown:
      return kExitUnknown;
  }
  return kExitInternal;
}

int cmd_verify_c() {
  const Gf2Matrix c = Gf2Matrix::matrix_c();
  const Gf2Poly f = Gf2Poly::from_bit_string("10011");  // t^4+t^3+1
  const bool ok = eval_poly(f, c).is_zero();
  std::cout << "target:\n" << write_matrix_text(c);
  std::cout << "polynomial: " << f.to_string() << "\n";
  std::cout << "annihilates: " << (ok ? "yes" : "no") << "\n";
  return ok ? kExitHolds : kExitRefuted;
}

int cmd_derive_identity(int index) {
  std::cout << derive_power_identity(index).to_string() << "\n";
  return kExitHolds;
}

int cmd_decompose(const std::string& matrix_path, int k,
                  const std::string& strategy_name,
                  const std::string& cert_path, int workers,
                  std::uint64_t budget) {
  const Gf2Matrix a = read_matrix_file(matrix_path);
  SearchOptions opts;
  opts.workers = workers;
  if (budget > 0) opts.sat_step_budget = budget;
  const SearchReport rep =
      decompose(a, k, strategy_from_string(strategy_name), opts);
  const std::string json = search_report_to_json(rep);
  std::cout << json;
  if (!cert_path.empty()) write_text_file(cert_path, json);
  return report_exit_code(rep);
}

int cmd_theorem(int copies, const std::string& out_path) {
  const TheoremResult res = theorem_check(copies);
  if (res.instance) {
    const std::string dimacs = to_dimacs(*res.instance);
    if (out_path.empty()) {
      std::cout << dimacs;
    } else {
      write_text_file(out_path, dimacs);
      std::cout << search_report_to_json(res.report);
    }
    std::cerr << "satisfiability: unknown (instance exported, not solved)\n";
  } else {
    std::cout << search_report_to_json(res.report);
  }
  return report_exit_code(res.report);
}

int cmd_survey(int n, int k) {
  const std::vector<SurveyRow> rows = survey(n, k);
  bool any_open = false;
  bool any_none = false;
  for (const SurveyRow& row : rows) {
    std::string chain;
    for (const Gf2Poly& f : row.cls.invariant_factors) {
      if (!chain.empty()) chain += " | ";
      chain += f.to_string();
    }
    std::cout << chain << "\t" << to_string(row.report.status) << "\t"
              << row.report.space_size << "\n";
    if (row.report.status == SearchStatus::kExported ||
        row.report.status == SearchStatus::kUnknown)
      any_open = true;
    if (row.report.status == SearchStatus::kExhaustedNone) any_none = true;
  }
  if (any_open) return kExitUnknown;
  return any_none ? kExitRefuted : kExitHolds;
}

int cmd_enumerate(int n, bool count_only) {
  if (count_only) {
    std::cout << idempotent_count_formula(n).to_decimal_string() << "\n";
    return kExitHolds;
  }
  if (n > 6)
    throw CLI::ValidationError(
        "enumerate-idempotents", "full enumeration is limited to n <= 6; "
                                 "use --count-only for larger n");
  iter_idempotents(n, Strategy::kStratified, [](const Gf2Matrix& p) {
    std::cout << write_matrix_text(p);
    return true;
  });
  return kExitHolds;
}

int cmd_export_cnf(const std::string& matrix_path, int k,
                   const std::string& out_path) {
  const Gf2Matrix a = read_matrix_file(matrix_path);
  const CnfInstance inst = encode(a, k);
  write_text_file(out_path, to_dimacs(inst));
  std::cout << "vars " << inst.num_vars << "\n"
            << "clauses " << inst.clauses.size() << "\n"
            << "file " << out_path << "\n";
  return kExitUnknown;  // exported, satisfiability not determined here
}

int cmd_import_solution(const std::string& cnf_path,
                        const std::string& solution_path) {
  const CnfInstance inst = parse_dimacs(read_text_file(cnf_path));
  const ExternalSolution sol =
      parse_solver_output(read_text_file(solution_path), inst.num_vars);
  if (!sol.satisfiable) {
    std::cout << "claim: unsatisfiable (external result; not re-verified "
                 "here)\n";
    return kExitRefuted;
  }
  const Decomposition d = decode_and_verify(inst, sol.assignment);
  SearchReport rep;
  rep.target = inst.target;
  rep.k = inst.k;
  rep.status = SearchStatus::kFound;
  rep.witness = d;
  rep.strategy = Strategy::kSat;
  rep.space_size = 0;
  std::cout << search_report_to_json(rep);
  return kExitHolds;
}

int cmd_canonical_form(const std::string& matrix_path) {
  const Gf2Matrix a = read_matrix_file(matrix_path);
  const std::vector<Gf2Poly> chain = invariant_factors(a);
  std::string joined;
  for (const Gf2Poly& f : chain) {
    if (!joined.empty()) joined += " | ";
    joined += f.to_string();
  }
  std::cout << "invariant_factors: " << joined << "\n";
  std::cout << "frobenius_form:\n" << write_matrix_text(frobenius_form(a));
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nil-clean decompositions over GF(2)"};
  app.set_version_flag("--version", kToolString);
  app.require_subcommand(1);

  auto* verify_c = app.add_subcommand(
      "verify-c", "check the annihilating polynomial of the reference matrix");

  int identity_index = 3;
  auto* derive = app.add_subcommand(
      "derive-identity", "print the reduced (P+Q)^(e+1) + (P+Q)^e word set");
  derive->add_option("--index", identity_index, "nilpotency index e")
      ->check(CLI::PositiveNumber);

  std::string dec_matrix, dec_strategy = "stratified", dec_cert;
  int dec_k = 3, dec_workers = 0;
  std::uint64_t dec_budget = 0;
  auto* dec = app.add_subcommand("decompose",
                                 "search for target = p + q, p idempotent, "
                                 "q nilpotent of index at most k");
  dec->add_option("--matrix", dec_matrix, "matrix file")->required();
  dec->add_option("--index", dec_k, "nilpotency index k")
      ->required()
      ->check(CLI::PositiveNumber);
  dec->add_option("--strategy", dec_strategy, "brute | stratified | sat")
      ->check(CLI::IsMember({"brute", "stratified", "sat"}));
  dec->add_option("--emit-cert", dec_cert, "also write the JSON report here");
  dec->add_option("--workers", dec_workers,
                  "worker threads for stratified search (0 = auto)");
  dec->add_option("--budget", dec_budget, "solver step budget (sat strategy)");

  int theorem_copies = 1;
  std::string theorem_out;
  auto* theorem = app.add_subcommand(
      "theorem", "the headline claim at m copies of the reference matrix");
  theorem->add_option("--copies", theorem_copies, "odd number of copies")
      ->required();
  theorem->add_option("--out", theorem_out, "DIMACS output path (m >= 3)");

  int survey_n = 0, survey_k = 3;
  auto* surv = app.add_subcommand(
      "survey", "decomposability of every similarity class");
  surv->add_option("--n", survey_n, "dimension (1..6)")->required();
  surv->add_option("--index", survey_k, "nilpotency index k")
      ->required()
      ->check(CLI::PositiveNumber);

  int enum_n = 0;
  bool enum_count_only = false;
  auto* enu = app.add_subcommand("enumerate-idempotents",
                                 "stream every idempotent matrix");
  enu->add_option("--n", enum_n, "dimension")->required();
  enu->add_flag("--count-only", enum_count_only,
                "print only the exact count (closed formula)");

  std::string exp_matrix, exp_out;
  int exp_k = 3;
  auto* exp = app.add_subcommand("export-cnf",
                                 "encode the search as DIMACS CNF");
  exp->add_option("--matrix", exp_matrix, "matrix file")->required();
  exp->add_option("--index", exp_k, "nilpotency index k")
      ->required()
      ->check(CLI::PositiveNumber);
  exp->add_option("--out", exp_out, "DIMACS output path")->required();

  std::string imp_cnf, imp_solution;
  auto* imp = app.add_subcommand(
      "import-solution", "decode and verify an external solver's answer");
  imp->add_option("--cnf", imp_cnf, "DIMACS file written by this tool")
      ->required();
  imp->add_option("--solution", imp_solution, "solver output file")
      ->required();

  std::string canon_matrix;
  auto* canon = app.add_subcommand(
      "canonical-form", "invariant factors and the rational canonical form");
  canon->add_option("--matrix", canon_matrix, "matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify_c->parsed()) return cmd_verify_c();
    if (derive->parsed()) return cmd_derive_identity(identity_index);
    if (dec->parsed())
      return cmd_decompose(dec_matrix, dec_k, dec_strategy, dec_cert,
                           dec_workers, dec_budget);
    if (theorem->parsed()) return cmd_theorem(theorem_copies, theorem_out);
    if (surv->parsed()) return cmd_survey(survey_n, survey_k);
    if (enu->parsed()) return cmd_enumerate(enum_n, enum_count_only);
    if (exp->parsed()) return cmd_export_cnf(exp_matrix, exp_k, exp_out);
    if (imp->parsed()) return cmd_import_solution(imp_cnf, imp_solution);
    if (canon->parsed()) return cmd_canonical_form(canon_matrix);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const FileError& e) {
    std::cerr << e.what() << "\n";
    return kExitNoFile;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitData;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInternal;
  }
}
