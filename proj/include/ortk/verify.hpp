#ifndef ORTK_VERIFY_HPP
#define ORTK_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ortk/orgraph.hpp"
#include "ortk/rootsys.hpp"

namespace ortk {

struct ReportEntry {
  std::string check;
  nlohmann::ordered_json params;
  std::string status;  // pass, fail or skipped
  nlohmann::ordered_json payload;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;

  bool pass() const;
  std::size_t count(const std::string& status) const;
  nlohmann::ordered_json to_json() const;
};

enum class CheckGroup { Exchange, Extension, Iso, All };

// Restricts a suite run to matching manifest families.
struct FamilyFilter {
  std::optional<Family> family;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<Rational> alpha;
  bool matches(const FamilySpec& s) const;
};

// Names as on the command line: gl, gl11n, ospB, ospD, d21.
FamilySpec make_family(const std::string& name, int m, int n, const std::optional<Rational>& alpha);
Family parse_family_name(const std::string& name);
FamilySpec family_from_json(const nlohmann::json& j);

nlohmann::json default_manifest();

// lambda = 0, basis vectors, seeded random small combinations, and weights
// orthogonal to chosen isotropic roots. Deduplicated, in generation order.
std::vector<Weight> lambda_grid(const RootSystem& rs, const ORGraph& og, const nlohmann::json& grid, int salt);

// Capped by ORTK_THREADS; at least 1.
int worker_count();

VerificationReport run_verification(const nlohmann::json& manifest, CheckGroup group, const FamilyFilter& filter = {});

}  // namespace ortk

#endif
