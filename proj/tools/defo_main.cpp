// Command-line front end: verification subcommands over the operator
// algebra. Exit codes: 0 pass, 1 mathematical failure or flag, 2 usage or
// parse error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "defo/commands.hpp"
#include "defo/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw defo::DomainError("cannot open file: " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int emit(const defo::Report& rep, const std::string& out_path) {
  std::cout << rep.summary_text();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw defo::DomainError("cannot write file: " + out_path);
    out << rep.full_text();
  }
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of deformations of the vector-field action on forms"};
  app.require_subcommand(1);

  int n = 2;
  int max_degree = 3;
  int trials = 10;
  std::uint64_t seed = 1;
  int k = 0;
  int shift = 1;
  int jet = 3;
  int order = 2;
  std::string params_path, x_expr, y_expr, out_path, which = "all";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "spatial dimension (>= 2)");
    cmd->add_option("--out", out_path, "write the full report to this path");
  };

  CLI::App* vc = app.add_subcommand("verify-cocycles", "Chevalley-Eilenberg identities");
  add_common(vc);
  vc->add_option("--max-degree", max_degree, "monomial field degree bound");
  vc->add_option("--trials", trials, "extra random fields");
  vc->add_option("--seed", seed, "random seed");

  CLI::App* mc = app.add_subcommand("mc2", "symbolic Maurer-Cartan decomposition");
  add_common(mc);
  mc->add_option("--seed", seed, "random seed");

  CLI::App* rl = app.add_subcommand("relations", "integrability relations of an assignment");
  add_common(rl);
  rl->add_option("--params", params_path, "parameter document (JSON)")->required();

  CLI::App* df = app.add_subcommand("defect", "homomorphism defect for a field pair");
  add_common(df);
  df->add_option("--params", params_path, "parameter document (JSON)")->required();
  df->add_option("--x", x_expr, "first vector field, e.g. [x1^2, 0]")->required();
  df->add_option("--y", y_expr, "second vector field")->required();

  CLI::App* ob = app.add_subcommand("obstruction", "bounded-ansatz coboundary probe");
  add_common(ob);
  ob->add_option("--k", k, "source degree");
  ob->add_option("--shift", shift, "degree shift (1, 2 or 3)");
  ob->add_option("--jet", jet, "jet order bound S_max");
  ob->add_option("--order", order, "derivative order bound U_max");

  CLI::App* ex = app.add_subcommand("examples", "example deformation gallery");
  add_common(ex);
  ex->add_option("--which", which, "6.1 | 6.2 | 6.4 | uniform | all");

  CLI::App* un = app.add_subcommand("uniform", "uniform 1-parameter system");
  add_common(un);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (vc->parsed()) return emit(defo::cmd_verify_cocycles(n, max_degree, trials, seed), out_path);
    if (mc->parsed()) return emit(defo::cmd_mc2(n, seed), out_path);
    if (rl->parsed()) return emit(defo::cmd_relations(n, read_file(params_path)), out_path);
    if (df->parsed())
      return emit(defo::cmd_defect(n, read_file(params_path), x_expr, y_expr), out_path);
    if (ob->parsed()) return emit(defo::cmd_obstruction(n, k, shift, jet, order), out_path);
    if (ex->parsed()) return emit(defo::cmd_examples(n, which), out_path);
    if (un->parsed()) return emit(defo::cmd_uniform(n), out_path);
  } catch (const defo::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const defo::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const defo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
