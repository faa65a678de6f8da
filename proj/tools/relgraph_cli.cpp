// relgraph: command-line front end.
//
// Exit codes: 0 success, 1 a proven bound was violated or a cross-check
// disagreed (an implementation bug), 2 bad input or refused precondition.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "relgraph/automorphisms.hpp"
#include "relgraph/connectivity.hpp"
#include "relgraph/errors.hpp"
#include "relgraph/family.hpp"
#include "relgraph/io.hpp"
#include "relgraph/report.hpp"
#include "relgraph/theorems.hpp"

namespace fs = std::filesystem;
using namespace relgraph;

namespace {

constexpr int kOk = 0;
constexpr int kBug = 1;
constexpr int kInput = 2;

void print_atoms(std::ostream& out, const std::vector<Fragment>& atoms) {
  for (const auto& a : atoms) out << "  " << a.set.to_string() << "  boundary " << a.boundary.to_string() << '\n';
}

int cmd_spheres(const std::string& file, Vertex v, std::size_t max_j, bool reflexive) {
  Relation rel = io::read_relation_file(file);
  if (reflexive) rel = reflexive_closure(rel);
  if (v >= rel.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
  std::cout << "j ball sphere\n";
  VertexSet previous = ball(rel, v, 0);
  std::cout << 0 << ' ' << previous.size() << " -\n";
  for (std::size_t j = 1; j <= max_j; ++j) {
    VertexSet current = image(rel, previous);
    std::cout << j << ' ' << current.size() << ' ' << (current - previous).size() << '\n';
    previous = std::move(current);
  }
  return kOk;
}

int cmd_kappa(const std::string& file, bool oracle, std::size_t oracle_max_n, long long fault_offset) {
  const Relation rel = io::read_relation_file(file);
  if (oracle && rel.size() > oracle_max_n) throw ThresholdError("fragment oracle", rel.size(), oracle_max_n);
  const ConnectivityResult result = kappa(rel, KappaOptions{fault_offset});
  std::cout << "n = " << rel.size() << '\n';
  if (result.complete()) {
    std::cout << "complete: kappa = n-1 = " << result.kappa << '\n';
  } else {
    std::cout << "kappa = " << result.kappa << '\n';
    std::cout << "atom_size = " << result.atom_size << '\n';
    std::cout << "atoms (" << result.atoms.size() << "):\n";
    print_atoms(std::cout, result.atoms);
  }
  if (!oracle) return kOk;

  const OracleResult brute = fragments_oracle(rel, oracle_max_n);
  bool agree = brute.kappa == result.kappa && brute.complete == result.complete();
  if (agree && !result.complete()) {
    std::size_t smallest = rel.size();
    for (const auto& f : brute.fragments) smallest = std::min(smallest, f.set.size());
    for (const auto& atom : result.atoms) {
      const bool listed = std::any_of(brute.fragments.begin(), brute.fragments.end(),
                                      [&](const Fragment& f) { return f.set == atom.set; });
      agree = agree && listed && atom.set.size() == smallest;
    }
  }
  std::cout << "oracle kappa = " << brute.kappa << " (" << brute.fragments.size() << " fragments)\n";
  std::cout << "agreement: " << (agree ? "yes" : "NO") << '\n';
  return agree ? kOk : kBug;
}

int cmd_atoms(const std::string& file, std::optional<Vertex> v) {
  const Relation rel = io::read_relation_file(file);
  const ConnectivityResult forward = kappa(rel);
  if (forward.complete()) throw AtomsUndefined();
  const ConnectivityResult backward = kappa(reverse(rel));
  const AtomDisjointnessReport report = atom_disjointness(forward, backward);
  std::cout << "kappa = " << forward.kappa << "  a = " << forward.atom_size << '\n';
  print_atoms(std::cout, forward.atoms);
  std::cout << "reverse: kappa = " << backward.kappa << "  a = " << backward.atom_size << '\n';
  print_atoms(std::cout, backward.atoms);
  std::cout << "disjoint: relation " << (report.forward_disjoint ? "yes" : "no") << ", reverse "
            << (report.reverse_disjoint ? "yes" : "no") << '\n';
  if (v) {
    if (*v >= rel.size()) throw InputError("vertex out of range");
    const auto it = std::find_if(forward.atoms.begin(), forward.atoms.end(),
                                 [&](const Fragment& f) { return f.set.contains(*v); });
    std::cout << "atom containing " << *v << ": " << (it == forward.atoms.end() ? "none" : it->set.to_string())
              << '\n';
  }
  return report.bug() ? kBug : kOk;
}

int cmd_girth(const std::string& file, bool strip_loops) {
  Relation rel = io::read_relation_file(file);
  if (strip_loops) rel = remove_loops(rel);
  std::cout << girth(rel).to_string() << '\n';
  return kOk;
}

int cmd_zerosum(const std::string& group_file, const std::string& subset_file) {
  const FiniteGroup group = io::read_group_file(group_file);
  const GroupSubset subset(group, io::read_subset_file(subset_file));
  const ZeroProductWitness w = zero_product_witness(group, subset);
  const ZeroProductAudit audit = audit_zero_product(group, subset, w);
  std::cout << "k = " << w.k << '\n' << "bound = " << w.bound << '\n' << "sequence:";
  for (Element s : w.sequence) std::cout << ' ' << s;
  std::cout << '\n';
  if (audit.minimal) std::cout << "minimal: " << (*audit.minimal ? "yes" : "NO") << '\n';
  const bool ok = audit.multiplies_to_identity && audit.within_bound && audit.minimal.value_or(true);
  return ok ? kOk : kBug;
}

struct VerifyArgs {
  std::string family;
  std::vector<std::string> files;
  std::size_t bound = 0;
  std::string checks = "all";
  std::string report_path;
  FamilyOptions options;
};

int cmd_verify(const VerifyArgs& args) {
  FamilySpec spec;
  spec.kind = FamilySpec::parse_kind(args.family);
  spec.bound = args.bound;
  for (const auto& f : args.files) spec.files.emplace_back(f);
  if (spec.kind == FamilySpec::Kind::FromFiles && spec.files.empty()) throw InputError("from-file needs paths");
  if (spec.kind != FamilySpec::Kind::FromFiles && spec.bound == 0) {
    throw InputError("family " + spec.name() + " needs a size bound (--max-n, --max-order, --max-m or --m)");
  }
  const CheckSelection checks = CheckSelection::parse(args.checks);

  std::ofstream report;
  if (!args.report_path.empty()) {
    report.open(args.report_path);
    if (!report) throw InputError("cannot write " + args.report_path);
  }
  const FamilySummary summary = run_family(spec, checks, args.options, [&](const VerificationReport& r) {
    if (report.is_open()) report << to_ndjson_line(r) << '\n';
    if (r.bugs() > 0) std::cerr << "BUG: " << to_ndjson_line(r) << '\n';
    for (const auto& note : r.notes) {
      if (r.instance.family == "from_files") std::cerr << "warning: " << r.instance.path << ": " << note << '\n';
    }
  });
  std::cout << "family " << spec.name();
  if (spec.kind != FamilySpec::Kind::FromFiles) std::cout << " (bound " << spec.bound << ")";
  std::cout << '\n';
  print_summary(std::cout, summary);
  return summary.bugs == 0 ? kOk : kBug;
}

std::string subset_tag(const std::vector<Element>& subset) {
  std::string out;
  for (Element s : subset) out += (out.empty() ? "" : "_") + std::to_string(s);
  return out;
}

int cmd_gen(const std::string& family, std::size_t n, const std::string& out_dir, bool reflexive) {
  fs::create_directories(out_dir);
  std::size_t written = 0;
  if (family == "circulants") {
    if (n < 2) throw InputError("gen circulants needs --n >= 2");
    const FiniteGroup group = cyclic(n);
    for_each_generator_set(n, [&](const std::vector<Element>& members) {
      const CayleyRelation cay = cayley_relation(group, GroupSubset(group, members), reflexive);
      const std::string name = "circulant_n" + std::to_string(n) + "_s" + subset_tag(members) + ".rel";
      io::write_relation_file(fs::path(out_dir) / name, cay.relation);
      ++written;
    });
  } else if (family == "catalog") {
    if (n < 2) throw InputError("gen catalog needs --n (maximum order) >= 2");
    for (const FiniteGroup& g : group_catalog(n)) {
      io::write_group_file(fs::path(out_dir) / (g.name() + ".grp"), g);
      ++written;
    }
  } else {
    throw InputError("unknown gen family '" + family + "' (circulants, catalog)");
  }
  std::cout << "wrote " << written << " files to " << out_dir << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relgraph: sphere growth, girth, connectivity and atoms of finite relations"};
  app.require_subcommand(1);

  std::string file;
  Vertex vertex = 0;
  std::size_t max_j = 0;
  bool reflexive = false;
  auto* spheres = app.add_subcommand("spheres", "Ball and sphere sizes around a vertex");
  spheres->add_option("file", file, ".rel file")->required();
  spheres->add_option("-v,--vertex", vertex, "Base vertex");
  spheres->add_option("-j,--max-j", max_j, "Largest radius")->required();
  spheres->add_flag("--reflexive", reflexive, "Add all loops first");

  bool oracle = false;
  std::size_t oracle_max_n = kDefaultOracleMaxN;
  long long fault_offset = 0;
  auto* kappa_cmd = app.add_subcommand("kappa", "Connectivity, atom size and atoms");
  kappa_cmd->add_option("file", file, ".rel file")->required();
  kappa_cmd->add_flag("--oracle", oracle, "Cross-check against exhaustive subset enumeration");
  kappa_cmd->add_option("--oracle-max-n", oracle_max_n, "Largest n the oracle accepts");
  kappa_cmd->add_option("--fault-offset", fault_offset, "Fault injection: shift the flow result")->group("");

  std::optional<Vertex> atom_vertex;
  auto* atoms_cmd = app.add_subcommand("atoms", "Atoms of a relation and its reverse");
  atoms_cmd->add_option("file", file, ".rel file")->required();
  atoms_cmd->add_option("-v,--vertex", atom_vertex, "Report the atom containing this vertex");

  bool strip_loops = false;
  auto* girth_cmd = app.add_subcommand("girth", "Length of a shortest directed cycle");
  girth_cmd->add_option("file", file, ".rel file")->required();
  girth_cmd->add_flag("--strip-loops", strip_loops, "Remove loops before measuring");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the bound checks over an instance family");
  verify->add_option("family", verify_args.family,
                     "circulants | cayley-abelian | cayley-dihedral | cayley-symmetric | cayley-catalog | from-file")
      ->required();
  verify->add_option("files", verify_args.files, ".rel files for from-file");
  verify->add_option("--max-n,--max-order,--max-m,--m", verify_args.bound, "Family size bound");
  verify->add_option("--checks", verify_args.checks, "sphere,growth,girth,zerosum,powers,atoms or all");
  verify->add_option("--report", verify_args.report_path, "Newline-delimited JSON output");
  verify->add_flag("--all-vertices", verify_args.options.checks.all_vertices, "Check every base vertex");
  verify->add_option("--brute-max-n", verify_args.options.brute_max_n, "Automorphism search limit");
  verify->add_option("--powers-max-n", verify_args.options.powers_max_n, "Power check limit");
  verify->add_option("--atoms-max-n", verify_args.options.atoms_max_n, "Atom check limit");
  verify->add_option("--sphere-shift", verify_args.options.checks.sphere_bound_shift,
                     "Fault injection: offset to the sphere bound")
      ->group("");

  std::string group_file;
  std::string subset_file;
  auto* zerosum = app.add_subcommand("zerosum", "Shortest product of subset elements equal to the identity");
  zerosum->add_option("group", group_file, ".grp file")->required();
  zerosum->add_option("subset", subset_file, "Subset file")->required();

  std::string gen_family;
  std::size_t gen_n = 0;
  std::string out_dir = ".";
  bool gen_reflexive = false;
  auto* gen = app.add_subcommand("gen", "Write instance files");
  gen->add_option("family", gen_family, "circulants | catalog")->required();
  gen->add_option("--n", gen_n, "Order (circulants) or maximum order (catalog)")->required();
  gen->add_option("-o,--out", out_dir, "Output directory");
  gen->add_flag("--reflexive", gen_reflexive, "Include loops");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*spheres) return cmd_spheres(file, vertex, max_j, reflexive);
    if (*kappa_cmd) return cmd_kappa(file, oracle, oracle_max_n, fault_offset);
    if (*atoms_cmd) return cmd_atoms(file, atom_vertex);
    if (*girth_cmd) return cmd_girth(file, strip_loops);
    if (*verify) return cmd_verify(verify_args);
    if (*zerosum) return cmd_zerosum(group_file, subset_file);
    if (*gen) return cmd_gen(gen_family, gen_n, out_dir, gen_reflexive);
  } catch (const std::logic_error& e) {
    // InputError derives from invalid_argument; everything else here is a broken invariant.
    if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) {
      std::cerr << "error: " << e.what() << '\n';
      return kInput;
    }
    if (dynamic_cast<const AtomsUndefined*>(&e) != nullptr) {
      std::cerr << "error: " << e.what() << '\n';
      return kInput;
    }
    std::cerr << "BUG: " << e.what() << '\n';
    return kBug;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
