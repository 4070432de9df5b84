// tri3: build order-three triangular algebras from structure-constant files,
// compute derivations and first cohomology, and verify the corner
// decomposition and quotient formula against brute force.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tri3/algebra.hpp"
#include "tri3/catalog.hpp"
#include "tri3/derivation.hpp"
#include "tri3/hom.hpp"
#include "tri3/instance.hpp"
#include "tri3/report.hpp"
#include "tri3/triangular.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kNotApplicable = 2,
  kIoOrParse = 3,
  kCheckFailed = 4,
};

std::string render_map(const tri3::LinearMap& f, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t r = 0; r < f.dim(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < f.dim(); ++c) os << (c ? " " : "") << f.matrix(r, c);
    os << "]\n";
  }
  return os.str();
}

void print_basis(const tri3::MapSpace& space, const std::string& label) {
  for (std::size_t i = 0; i < space.dim(); ++i) {
    std::cout << "  " << label << " #" << i << ":\n" << render_map(space.basis_map(i), "    ");
  }
}

/// Loads an instance, translating failures into diagnostics and exit codes.
/// Returns the exit code; on success `out` holds the system.
int load(const std::string& path, tri3::TriSystem& out) {
  try {
    out = tri3::parse_instance(path);
    return kOk;
  } catch (const tri3::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const tri3::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const tri3::ValidationError& e) {
    std::cerr << "validation failed: " << path << "\n" << e.report().to_string();
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation failed: " << path << ": " << e.what() << "\n";
    return kValidation;
  }
}

int cmd_validate(const std::string& path) {
  tri3::TriSystem sys;
  if (int rc = load(path, sys)) return rc;
  std::cout << path << ": ok (dim T = "
            << sys.A->dim + sys.M->dim + sys.P->dim + sys.B->dim + sys.N->dim + sys.C->dim << ")\n";
  return kOk;
}

int cmd_info(const std::string& path) {
  tri3::TriSystem sys;
  if (int rc = load(path, sys)) return rc;
  const tri3::TriAlgebra t = tri3::build_triangular(sys);
  std::cout << "instance " << path << "\n";
  for (tri3::Block b : tri3::kAllBlocks)
    std::cout << "  " << tri3::block_name(b) << ": dim " << t.block_dim(b) << ", offset " << t.offset(b) << "\n";
  std::cout << "  dim T = " << t.dim() << (sys.unital() ? " (unital)" : " (non-unital)") << "\n";
  for (const auto& [name, alg] : {std::pair{"A", sys.A}, std::pair{"B", sys.B}, std::pair{"C", sys.C}})
    std::cout << "  " << name << ": dim Z = " << tri3::center(*alg).dim() << ", H1 = " << tri3::h1_dim(*alg)
              << (alg->unit ? "" : ", no unit") << "\n";
  std::cout << "  pairing: " << (sys.mu->tensor.is_zero() ? "zero" : "nonzero") << "\n";
  return kOk;
}

int cmd_der(const std::string& path, const std::string& target) {
  tri3::TriSystem sys;
  if (int rc = load(path, sys)) return rc;
  tri3::StructureAlgebra alg;
  if (target == "T") alg = tri3::build_triangular(sys).algebra;
  else if (target == "A") alg = *sys.A;
  else if (target == "B") alg = *sys.B;
  else alg = *sys.C;
  const tri3::MapSpace der = tri3::derivation_space(alg);
  const tri3::MapSpace inn = tri3::inner_derivation_space(alg);
  std::cout << "target " << target << " (dim " << alg.dim << ")\n";
  std::cout << "  dim Der = " << der.dim() << "\n  dim Inn = " << inn.dim()
            << "\n  H1 = " << tri3::quotient_dim(inn.space, der.space) << "\n";
  print_basis(der, "Der basis");
  return kOk;
}

int cmd_hom(const std::string& path, const std::string& module) {
  tri3::TriSystem sys;
  if (int rc = load(path, sys)) return rc;
  const tri3::Bimodule& mod = module == "M" ? *sys.M : (module == "N" ? *sys.N : *sys.P);
  const tri3::MapSpace hom = tri3::hom_space(mod);
  const tri3::MapSpace zr = tri3::zr_space(mod);
  std::cout << "module " << module << " (dim " << mod.dim << ")\n";
  std::cout << "  dim Hom = " << hom.dim() << "\n  dim ZR = " << zr.dim() << "\n";
  print_basis(hom, "Hom basis");
  print_basis(zr, "ZR basis");
  return kOk;
}

int cmd_verify(const std::vector<std::string>& paths, bool json, bool strict) {
  std::vector<tri3::TriSystem> systems(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (int rc = load(paths[i], systems[i])) return rc;

  // Instances are independent; results are collected in argument order.
  std::vector<std::future<tri3::CohomologyReport>> pending;
  for (std::size_t i = 0; i < paths.size(); ++i)
    pending.push_back(std::async(std::launch::async, [&, i] { return tri3::verify_theorems(systems[i], paths[i]); }));
  std::vector<tri3::CohomologyReport> reports;
  for (auto& f : pending) reports.push_back(f.get());

  if (json)
    std::cout << (reports.size() == 1 ? tri3::to_json(reports.front()) : tri3::to_json(reports));
  else
    for (const auto& r : reports) std::cout << tri3::render_text(r);

  bool any_failed = false, any_na = false;
  for (const auto& r : reports) {
    any_failed |= !r.all_passed();
    any_na |= !(r.unital && r.precondition_holds);
  }
  if (any_failed) return kCheckFailed;
  if (strict && any_na) return kNotApplicable;
  return kOk;
}

int cmd_gen(const std::string& preset, std::uint64_t seed, const tri3::GenParams& params, const std::string& out) {
  tri3::TriSystem sys;
  try {
    sys = tri3::generate_instance(seed, preset, params);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  const std::string text = tri3::write_instance(sys);
  if (out.empty() || out == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!(f << text)) {
    std::cerr << "error: cannot write '" << out << "'\n";
    return kIoOrParse;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tri3: derivations and first cohomology of order-three triangular algebras"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "Parse an instance file and run every axiom check");
  validate->add_option("file", file, "Instance file")->required();

  auto* info = app.add_subcommand("info", "Summarize block dimensions, centers and corner cohomology");
  info->add_option("file", file, "Instance file")->required();

  std::string target = "T";
  auto* der = app.add_subcommand("der", "Derivations, inner derivations and H1 of T or a corner algebra");
  der->add_option("file", file, "Instance file")->required();
  der->add_option("--target", target, "Algebra to analyze")->check(CLI::IsMember({"T", "A", "B", "C"}));

  std::string module = "M";
  auto* hom = app.add_subcommand("hom", "Bimodule homomorphisms and central Rosenblum operators");
  hom->add_option("file", file, "Instance file")->required();
  hom->add_option("--module", module, "Bimodule to analyze")->check(CLI::IsMember({"M", "N", "P"}));

  std::vector<std::string> files;
  bool json = false, strict = false;
  auto* verify = app.add_subcommand("verify", "Run the full verification pipeline");
  verify->add_option("files", files, "Instance files")->required();
  verify->add_flag("--json", json, "Emit the report as JSON");
  verify->add_flag("--strict", strict, "Exit 2 when the cohomology precondition does not hold");

  std::string preset, out;
  std::uint64_t seed = 0;
  tri3::GenParams params;
  std::size_t k = 0, dm = 0, dp = 0, dn = 0;
  std::string a_kind, b_kind, c_kind, mu;
  auto* gen = app.add_subcommand("gen", "Generate a catalog instance");
  gen->add_option("--preset", preset, "Catalog preset")->required()->check(CLI::IsMember(tri3::catalog_presets()));
  gen->add_option("--seed", seed, "Random seed")->required();
  auto* k_opt = gen->add_option("--k", k, "matrix-corner: A = M_k(Q)");
  auto* dm_opt = gen->add_option("--dm", dm, "scalar-towers: dim M");
  auto* dp_opt = gen->add_option("--dp", dp, "scalar-towers: dim P");
  auto* dn_opt = gen->add_option("--dn", dn, "scalar-towers: dim N");
  auto* a_opt = gen->add_option("--a", a_kind, "upper-tri-blocks: A kind")->check(CLI::IsMember({"Q", "Q2", "M2"}));
  auto* b_opt = gen->add_option("--b", b_kind, "upper-tri-blocks: B kind")->check(CLI::IsMember({"Q", "Q2", "M2"}));
  auto* c_opt = gen->add_option("--c", c_kind, "upper-tri-blocks: C kind")->check(CLI::IsMember({"Q", "Q2", "M2"}));
  auto* mu_opt = gen->add_option("--mu", mu, "Pairing: zero or nonzero")->check(CLI::IsMember({"zero", "nonzero"}));
  gen->add_option("-o,--output", out, "Output file (default: standard output)");

  CLI11_PARSE(app, argc, argv);

  if (*validate) return cmd_validate(file);
  if (*info) return cmd_info(file);
  if (*der) return cmd_der(file, target);
  if (*hom) return cmd_hom(file, module);
  if (*verify) return cmd_verify(files, json, strict);
  if (*gen) {
    if (*k_opt) params.k = k;
    if (*dm_opt) params.dm = dm;
    if (*dp_opt) params.dp = dp;
    if (*dn_opt) params.dn = dn;
    if (*a_opt) params.a_kind = a_kind;
    if (*b_opt) params.b_kind = b_kind;
    if (*c_opt) params.c_kind = c_kind;
    if (*mu_opt) params.zero_pairing = (mu == "zero");
    return cmd_gen(preset, seed, params, out);
  }
  return EXIT_FAILURE;
}
