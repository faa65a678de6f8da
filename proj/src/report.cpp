#include "relgraph/report.hpp"

#include <iomanip>
#include <ostream>
#include <set>

namespace relgraph {

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["family"] = report.instance.family;
  if (!report.instance.group.empty()) out["group"] = report.instance.group;
  if (!report.instance.subset.empty()) out["subset"] = report.instance.subset;
  if (!report.instance.path.empty()) out["path"] = report.instance.path;
  out["n"] = report.instance.n;
  out["r"] = report.r ? nlohmann::ordered_json(*report.r) : nlohmann::ordered_json(nullptr);
  out["transitivity"] = TransitivityCertificate{report.transitivity, nullptr}.describe();
  out["caveat"] = report.caveat();
  auto& checks = out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"claim", std::string(c.claim)},
                      {"j_or_g", c.j_or_g},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"pass", c.pass},
                      {"tight", c.tight},
                      {"v", c.base}});
  }
  auto& witnesses = out["witnesses"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.witnesses) witnesses[key] = value;
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

std::string to_ndjson_line(const VerificationReport& report) { return to_json(report).dump(); }

nlohmann::ordered_json to_json(const FamilySummary& s) {
  return {{"instances", s.instances},
          {"checks", s.checks},
          {"passed", s.passed},
          {"failed", s.failed},
          {"bugs", s.bugs},
          {"caveated_instances", s.caveated_instances},
          {"refused_instances", s.refused_instances},
          {"tight_instances", s.tight_instances_by_claim}};
}

void print_summary(std::ostream& out, const FamilySummary& s) {
  out << "instances " << s.instances << "  checks " << s.checks << "  passed " << s.passed << "  failed "
      << s.failed << "  bugs " << s.bugs << "  caveated " << s.caveated_instances << "  refused "
      << s.refused_instances << '\n';
  if (s.checks_by_claim.empty()) return;
  out << std::left << std::setw(26) << "claim" << std::right << std::setw(10) << "checks" << std::setw(10)
      << "failed" << std::setw(12) << "tight" << std::setw(16) << "tight inst." << '\n';
  for (const auto& [claim_name, count] : s.checks_by_claim) {
    const auto lookup = [&](const FamilySummary::Counts& m) {
      const auto it = m.find(claim_name);
      return it == m.end() ? std::size_t{0} : it->second;
    };
    out << std::left << std::setw(26) << claim_name << std::right << std::setw(10) << count << std::setw(10)
        << lookup(s.failures_by_claim) << std::setw(12) << lookup(s.tight_checks_by_claim) << std::setw(16)
        << lookup(s.tight_instances_by_claim) << '\n';
  }
}

}  // namespace relgraph
