#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "throttle/families.hpp"
#include "throttle/report.hpp"

namespace throttle {

/// One published value: evaluate `quantity` on `fixture` after `transform`
/// under each rule in `rules` and compare with `expected`.
///
/// transform: "" | "-name" (delete vertex or edge) | "/name" (contract) |
///            "_name" (subdivide); name is a named vertex/edge or "u,v".
/// quantity:  see evaluate_quantity().
struct ReferenceEntry {
  std::string id;
  std::string tags;  // "figure=4;example=3.5"
  std::string fixture;
  std::string transform;
  std::string quantity;
  std::string rules;  // "", "pd", "pd,psd", ...
  std::string expected;
};

inline constexpr int kReferenceTableVersion = 1;

const std::vector<ReferenceEntry>& reference_table();

/// Applies a transform string, carrying vertex and edge names across the
/// relabeling. Contraction names the merged vertex "y", subdivision "z".
NamedGraph apply_transform(const NamedGraph& g, std::string_view transform);

/// Quantities:
///   order | edges | gamma | param | matched_sum | converse | eq_status |
///   th_star_identity | identity_holds | isolated_after_epn |
///   th:<kind> | th_k:<kind>:<k> | th_set:<kind>:<set> | pt_set:<set> |
///   pt_k:<k> | min_k_pt_le:<p> | k_of_p:<p> | step:<t>:<set> |
///   forcing:<set> | iso:<fixture> | cert:<sum|prodx> | degree:<vertex>
/// Rule-free quantities ignore `rule`. Sets are comma lists of names or
/// labels, or "all".
std::string evaluate_quantity(const NamedGraph& g, std::string_view quantity, RuleKind rule);

/// Runs the reference table. Filters are key=value pairs matched against the
/// entry tags (or "id" against an id prefix); all must match.
Report run_reference_suite(const std::vector<std::pair<std::string, std::string>>& filters = {}, int workers = 1);

struct PropertySuiteInfo {
  std::string name;
  std::string description;
  /// Largest order checked exhaustively; larger orders are sampled.
  int exhaustive_max;
};

const std::vector<PropertySuiteInfo>& property_suites();

/// Runs a property suite up to order nmax (<= 9). One record per graph.
/// Throws std::invalid_argument for an unknown suite.
Report run_property_suite(std::string_view name, int nmax, int sample_budget = 200, int workers = 1,
                          unsigned long long seed = 20240601);

}  // namespace throttle
