#pragma once

// Deterministic instance families and the driver that runs checks over them.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "relgraph/theorems.hpp"

namespace relgraph {

struct FamilySpec {
  enum class Kind {
    Circulants,       // Z_n for 2 <= n <= bound
    CayleyAbelian,    // abelian groups of order <= bound
    CayleyDihedral,   // dihedral groups D_m, 3 <= m <= bound
    CayleySymmetric,  // S_m, 3 <= m <= bound (bound <= 4)
    CayleyCatalog,    // every catalog group of order <= bound
    FromFiles,
  };
  Kind kind = Kind::Circulants;
  std::size_t bound = 0;
  std::vector<std::filesystem::path> files;

  std::string name() const;
  // Accepts the names produced by name(), with '-' or '_'.
  static Kind parse_kind(const std::string& name);
};

struct CheckSelection {
  bool sphere = false;
  bool growth = false;
  bool girth = false;
  bool zerosum = false;
  bool powers = false;
  bool atoms = false;

  static CheckSelection all();
  // Comma-separated names: sphere, growth, girth, zerosum, powers, atoms, all.
  static CheckSelection parse(const std::string& list);
};

struct FamilyOptions {
  CheckOptions checks;
  std::size_t brute_max_n = 10;           // transitivity search for file instances and atoms
  std::size_t powers_max_n = 8;           // automorphism enumeration for the power check
  std::vector<long long> powers = {0, 1, 2, 3};
  std::size_t atoms_max_n = 12;
};

struct FamilySummary {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t bugs = 0;
  std::size_t caveated_instances = 0;
  std::size_t refused_instances = 0;
  using Counts = std::map<std::string, std::size_t, std::less<>>;
  Counts checks_by_claim;
  Counts failures_by_claim;
  Counts tight_checks_by_claim;
  // Instances with at least one tight check at j_or_g >= 1.
  Counts tight_instances_by_claim;

  void add(const VerificationReport& report);
};

using ReportSink = std::function<void(const VerificationReport&)>;

// Streams one report per instance, in enumeration order.
FamilySummary run_family(const FamilySpec& family, const CheckSelection& checks, const FamilyOptions& options,
                         const ReportSink& sink);
std::vector<VerificationReport> run_family(const FamilySpec& family, const CheckSelection& checks,
                                           const FamilyOptions& options = {});

// Calls visit(S) for every nonempty S ⊆ [1, n), ascending by bitmask.
void for_each_generator_set(std::size_t n, const std::function<void(const std::vector<Element>&)>& visit);

}  // namespace relgraph
