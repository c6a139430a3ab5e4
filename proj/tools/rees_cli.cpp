#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rees/harness.hpp"
#include "rees/json_report.hpp"
#include "rees/matfile.hpp"

namespace {

using namespace rees;

PolyMatrix load_matrix(const std::string& path) {
  if (path == "-") return matfile_parse(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return matfile_parse(in);
}

std::string bidegree_str(const Polynomial& p) {
  auto bd = p.bidegree();
  if (!bd) return "(mixed)";
  return "(" + std::to_string(bd->dx) + "," + std::to_string(bd->dt) + ")";
}

void print_gens(const std::string& label, const std::vector<Polynomial>& gens) {
  std::cout << label << " (" << gens.size() << " generators)\n";
  for (const auto& g : gens)
    std::cout << "  " << bidegree_str(g) << "  " << g.str() << "\n";
}

void print_matrix(const std::string& label, const PolyMatrix& M) {
  std::cout << label << " (" << M.rows() << " x " << M.cols() << ")\n";
  for (int i = 0; i < M.rows(); ++i) {
    std::cout << "  ";
    for (int j = 0; j < M.cols(); ++j) {
      if (j) std::cout << "  ";
      std::cout << M.at(i, j).str();
    }
    std::cout << "\n";
  }
}

int cmd_gens(const std::string& file) {
  PolyMatrix phi = load_matrix(file);
  print_gens("Hilbert-Burch generators", hilbert_burch_generators(phi));
  return 0;
}

int cmd_sym(const std::string& file) {
  PolyMatrix phi = load_matrix(file);
  print_gens("L = ([T].phi)", symmetric_ideal(phi.ring(), phi).generators());
  return 0;
}

int cmd_dual(const std::string& file, int level, const std::string& method) {
  PolyMatrix phi = load_matrix(file);
  PresentationInput input = make_presentation(phi.ring(), phi);
  DualOptions dopts;
  dopts.method =
      method == "restricted" ? DualMethod::restricted : DualMethod::general;
  DualState s = iterated_dual_init(input.ring, input.phi, dopts);
  while (s.level < level) {
    DualState nxt = iterated_dual_step(input.ring, input.phi, s, dopts);
    if (nxt.stabilized) {
      std::cout << "stabilized at level " << s.level << "\n";
      break;
    }
    s = std::move(nxt);
  }
  print_matrix("B_" + std::to_string(s.level), s.B);
  print_gens("minimal generators of L + I_d(B_" + std::to_string(s.level) + ")",
             minimal_generators(s.dual_ideal));
  return 0;
}

int cmd_saturate(const std::string& file, int power, bool infinity) {
  PolyMatrix phi = load_matrix(file);
  PresentationInput input = make_presentation(phi.ring(), phi);
  Ideal L = symmetric_ideal(input.ring, input.phi);
  Ideal xs = x_ideal(input.ring);
  if (!infinity) {
    Ideal cur = L;
    print_gens("L", cur.generators());
    for (int i = 1; i <= power; ++i) {
      cur = ideal_colon(cur, xs);
      print_gens("L : (x)^" + std::to_string(i), minimal_generators(cur));
    }
    return 0;
  }
  auto [A, idx] = ideal_saturate(L, xs);
  std::cout << "sat_index " << idx << "\n";
  print_gens("L : (x)^infinity", minimal_generators(A));
  return 0;
}

int cmd_fiber(const std::string& file) {
  PolyMatrix phi = load_matrix(file);
  PresentationInput input = make_presentation(phi.ring(), phi);
  auto [A, idx] = rees_via_saturation(input);
  FiberInfo fib = special_fiber(A);
  std::cout << "principal " << (fib.is_principal ? "yes" : "no") << "\n";
  if (fib.is_principal) std::cout << "degree " << fib.degree << "\n";
  print_gens("special fiber", fib.generators);
  return 0;
}

int cmd_report(const std::string& file, bool json) {
  PolyMatrix phi = load_matrix(file);
  PresentationInput input = make_presentation(phi.ring(), phi);
  ReesReport rep = run_full_report(input);
  if (json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
    return 0;
  }
  std::cout << "n " << rep.n << "\n";
  std::cout << "G_d " << (rep.gd_ok ? "true" : "false") << "\n";
  std::cout << "linear_type " << (rep.linear_type ? "true" : "false") << "\n";
  auto opt = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("zero-ideal");
  };
  std::cout << "ht L " << rep.ht_L << "\n";
  std::cout << "ht A " << rep.ht_A << "\n";
  std::cout << "ht I_d(B_1) " << opt(rep.ht_IdB1) << "\n";
  std::cout << "ht I_d(B(phi')) " << opt(rep.ht_IdBphi_prime) << "\n";
  std::cout << "ht I_{d-1}(B(phi')) " << opt(rep.ht_Id1Bphi_prime) << "\n";
  std::cout << "sat_index " << rep.sat_index << "\n";
  std::cout << "stabilization_level " << rep.stabilization_level
            << (rep.stabilization_reached ? "" : " (cap hit)") << "\n";
  std::cout << "forms_equal " << (rep.forms_equal ? "true" : "false") << "\n";
  if (rep.fiber.is_principal)
    std::cout << "fiber principal, degree " << rep.fiber.degree << "\n";
  else
    std::cout << "fiber not principal (" << rep.fiber.generators.size()
              << " generators)\n";
  std::cout << "relation_type " << rep.relation_type_value << "\n";
  print_gens("minimal generators of A", rep.A_min_gens);
  return 0;
}

int cmd_random(const InstanceSpec& spec, bool json) {
  BatchSummary sum = run_batch(spec);
  if (json) {
    std::cout << summary_to_json(sum).dump(2) << "\n";
  } else {
    std::cout << "trials_run " << sum.trials_run << "\n";
    std::cout << "Gd_pass_count " << sum.Gd_pass_count << "\n";
    std::cout << "forms_equal_count " << sum.forms_equal_count << "\n";
    std::cout << "sat_index_histogram";
    for (const auto& [k, v] : sum.sat_index_histogram)
      std::cout << " " << k << ":" << v;
    std::cout << "\n";
    std::cout << "height_violation_count " << sum.height_violation_count
              << "\n";
    std::cout << "law_violation_count " << sum.law_violation_count << "\n";
    std::cout << "budget_exceeded_count " << sum.budget_exceeded_count << "\n";
    for (const auto& v : sum.violation_messages)
      std::cout << "violation: " << v << "\n";
    for (const auto& p : sum.counterexample_dumps)
      std::cout << "dump: " << p << "\n";
  }
  if (sum.height_violation_count > 0 || sum.law_violation_count > 0) return 4;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees algebra toolkit for almost-linear presentations"};
  app.require_subcommand(1);

  std::string file;
  int level = 1;
  std::string method = "general";
  int power = 0;
  bool infinity = false;
  bool json = false;
  InstanceSpec spec;
  std::uint64_t field_p = 32003;
  bool field_qq = false;

  auto* gens = app.add_subcommand("gens", "Hilbert-Burch generators");
  gens->add_option("file", file)->required();
  auto* sym = app.add_subcommand("sym", "Symmetric-algebra ideal L");
  sym->add_option("file", file)->required();
  auto* dual = app.add_subcommand("dual", "Iterated Jacobian dual at a level");
  dual->add_option("file", file)->required();
  dual->add_option("--level", level)->check(CLI::PositiveNumber);
  dual->add_option("--method", method)
      ->check(CLI::IsMember({"general", "restricted"}));
  auto* sat = app.add_subcommand("saturate", "Colon/saturation ladder");
  sat->add_option("file", file)->required();
  auto* popt = sat->add_option("--power", power)->check(CLI::NonNegativeNumber);
  auto* iopt = sat->add_flag("--infinity", infinity);
  popt->excludes(iopt);
  auto* fib = app.add_subcommand("fiber", "Special fiber");
  fib->add_option("file", file)->required();
  auto* rep = app.add_subcommand("report", "Full report");
  rep->add_option("file", file)->required();
  rep->add_flag("--json", json);
  auto* rnd = app.add_subcommand("random", "Random property-test batch");
  rnd->add_option("--d", spec.d)->required();
  rnd->add_option("--m", spec.m)->required();
  rnd->add_option("--n", spec.n)->required();
  rnd->add_option("--seed", spec.seed);
  rnd->add_option("--trials", spec.trials)->required();
  rnd->add_option("--field", field_p);
  rnd->add_flag("--qq", field_qq, "Work over the rationals");
  rnd->add_option("--dump-dir", spec.dump_dir);
  rnd->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gens->parsed()) return cmd_gens(file);
    if (sym->parsed()) return cmd_sym(file);
    if (dual->parsed()) return cmd_dual(file, level, method);
    if (sat->parsed()) {
      if (!infinity && popt->count() == 0) infinity = true;
      return cmd_saturate(file, power, infinity);
    }
    if (fib->parsed()) return cmd_fiber(file);
    if (rep->parsed()) return cmd_report(file, json);
    if (rnd->parsed()) {
      spec.field = field_qq ? Field::rationals() : Field::prime(field_p);
      return cmd_random(spec, json);
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: resource budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
