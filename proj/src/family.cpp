#include "relgraph/family.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "relgraph/automorphisms.hpp"
#include "relgraph/errors.hpp"
#include "relgraph/io.hpp"

namespace relgraph {

std::string FamilySpec::name() const {
  switch (kind) {
    case Kind::Circulants:
      return "circulants";
    case Kind::CayleyAbelian:
      return "cayley_abelian";
    case Kind::CayleyDihedral:
      return "cayley_dihedral";
    case Kind::CayleySymmetric:
      return "cayley_symmetric";
    case Kind::CayleyCatalog:
      return "cayley_catalog";
    case Kind::FromFiles:
      return "from_files";
  }
  return "unknown";
}

FamilySpec::Kind FamilySpec::parse_kind(const std::string& raw) {
  std::string name = raw;
  std::replace(name.begin(), name.end(), '-', '_');
  if (name == "circulants") return Kind::Circulants;
  if (name == "cayley_abelian") return Kind::CayleyAbelian;
  if (name == "cayley_dihedral") return Kind::CayleyDihedral;
  if (name == "cayley_symmetric") return Kind::CayleySymmetric;
  if (name == "cayley_catalog") return Kind::CayleyCatalog;
  if (name == "from_files" || name == "from_file") return Kind::FromFiles;
  throw InputError("unknown family '" + raw + "'");
}

CheckSelection CheckSelection::all() { return {true, true, true, true, true, true}; }

CheckSelection CheckSelection::parse(const std::string& list) {
  CheckSelection out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "all") return all();
    if (item == "sphere") out.sphere = true;
    else if (item == "growth") out.growth = true;
    else if (item == "girth") out.girth = true;
    else if (item == "zerosum") out.zerosum = true;
    else if (item == "powers") out.powers = true;
    else if (item == "atoms") out.atoms = true;
    else throw InputError("unknown check '" + item + "'");
  }
  return out;
}

namespace {

void bump(FamilySummary::Counts& counts, std::string_view key) {
  if (auto it = counts.find(key); it != counts.end()) {
    ++it->second;
  } else {
    counts.emplace(std::string(key), 1);
  }
}

}  // namespace

void FamilySummary::add(const VerificationReport& report) {
  ++instances;
  if (report.caveat()) ++caveated_instances;
  std::vector<std::string_view> tight_here;
  for (const auto& c : report.checks) {
    ++checks;
    bump(checks_by_claim, c.claim);
    if (c.pass) {
      ++passed;
    } else {
      ++failed;
      bump(failures_by_claim, c.claim);
    }
    if (c.tight) bump(tight_checks_by_claim, c.claim);
    if (c.tight && c.j_or_g >= 1 && std::find(tight_here.begin(), tight_here.end(), c.claim) == tight_here.end()) {
      tight_here.push_back(c.claim);
    }
  }
  for (auto claim_name : tight_here) bump(tight_instances_by_claim, claim_name);
  bugs += report.bugs();
}

void for_each_generator_set(std::size_t n, const std::function<void(const std::vector<Element>&)>& visit) {
  if (n < 2) return;
  if (n > 63) throw InputError("generator-set enumeration limited to groups of order <= 63");
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  std::vector<Element> subset;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    subset.clear();
    for (std::size_t bit = 0; bit + 1 < n; ++bit) {
      if ((mask >> bit) & 1u) subset.push_back(bit + 1);
    }
    visit(subset);
  }
}

namespace {

std::vector<FiniteGroup> family_groups(const FamilySpec& family) {
  using Kind = FamilySpec::Kind;
  switch (family.kind) {
    case Kind::Circulants: {
      std::vector<FiniteGroup> out;
      for (std::size_t n = 2; n <= family.bound; ++n) out.push_back(cyclic(n));
      return out;
    }
    case Kind::CayleyAbelian:
      return abelian_catalog(family.bound);
    case Kind::CayleyDihedral:
      return dihedral_catalog(family.bound);
    case Kind::CayleySymmetric:
      if (family.bound > 4) throw InputError("cayley_symmetric supports m <= 4");
      return symmetric_catalog(family.bound);
    case Kind::CayleyCatalog:
      return group_catalog(family.bound);
    case Kind::FromFiles:
      break;
  }
  return {};
}

void run_checks(const Relation& loopless, const TransitivityCertificate& cert, const CheckSelection& checks,
                const FamilyOptions& options, VerificationReport& report) {
  const std::size_t n = loopless.size();
  if (checks.sphere || checks.growth) {
    const Relation closed = reflexive_closure(loopless);
    if (checks.sphere) report.append(check_main_theorem(closed, cert, options.checks));
    if (checks.growth) report.append(check_ball_growth(closed, cert, options.checks));
  }
  if (checks.girth) {
    if (regular_degree(loopless)) {
      report.append(check_girth_bound(loopless, cert, options.checks));
    } else {
      report.notes.push_back("girth bound skipped: relation is not regular");
    }
  }
  if (checks.powers && n <= options.powers_max_n) {
    report.append(check_lemma_powers(loopless, cert, options.powers, options.powers_max_n));
  }
  if (checks.atoms && n >= 2 && n <= options.atoms_max_n && cert.certified()) {
    report.append(check_atoms(loopless, cert, std::max(options.brute_max_n, options.atoms_max_n)));
  }
}

}  // namespace

FamilySummary run_family(const FamilySpec& family, const CheckSelection& checks, const FamilyOptions& options,
                         const ReportSink& sink) {
  FamilySummary summary;
  const std::string family_name = family.name();

  if (family.kind == FamilySpec::Kind::FromFiles) {
    for (const auto& path : family.files) {
      const Relation rel = io::read_relation_file(path);
      VerificationReport report;
      report.instance = {family_name, {}, {}, path.string(), rel.size()};
      const TransitivityCertificate cert = certify_transitivity(rel, options.brute_max_n);
      report.transitivity = cert.kind;
      report.r = regular_degree(rel);
      if (cert.kind == TransitivityCertificate::Kind::NotTransitive) {
        report.notes.push_back("not point-transitive: checks refused");
        ++summary.refused_instances;
      } else {
        if (cert.kind == TransitivityCertificate::Kind::Uncertified) {
          report.notes.push_back("transitivity uncertified: results carry a caveat");
        }
        run_checks(remove_loops(rel), cert, checks, options, report);
        report.transitivity = cert.kind;
      }
      summary.add(report);
      sink(report);
    }
    return summary;
  }

  for (const FiniteGroup& g : family_groups(family)) {
    const auto group = std::make_shared<const FiniteGroup>(g);
    for_each_generator_set(group->order(), [&](const std::vector<Element>& members) {
      const GroupSubset subset(*group, members);
      VerificationReport report;
      report.instance = {family_name, group->name(), subset.members(), {}, group->order()};
      report.transitivity = TransitivityCertificate::Kind::LeftTranslations;
      report.r = subset.size();
      if (checks.sphere || checks.growth || checks.girth || checks.powers || checks.atoms) {
        const CayleyRelation cay = cayley_relation(group, subset, false);
        run_checks(cay.relation, cay.certificate, checks, options, report);
      }
      if (checks.zerosum) report.append(check_zero_product(*group, subset, options.checks));
      report.r = subset.size();
      summary.add(report);
      sink(report);
    });
  }
  return summary;
}

std::vector<VerificationReport> run_family(const FamilySpec& family, const CheckSelection& checks,
                                           const FamilyOptions& options) {
  std::vector<VerificationReport> out;
  run_family(family, checks, options, [&](const VerificationReport& r) { out.push_back(r); });
  return out;
}

}  // namespace relgraph
