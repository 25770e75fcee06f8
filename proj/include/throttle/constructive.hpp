#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "throttle/domination.hpp"
#include "throttle/throttling.hpp"

namespace throttle {

/// Which order bound a power-domination certificate targets.
enum class BoundTarget {
  /// th^x_gammaP(G) <= 6n/7, connected n >= 3.
  ProductSixSevenths,
  /// th_gammaP(G) <= floor(n/3) + 2, connected n >= 1.
  SumThirdPlusTwo,
};

std::string_view to_string(BoundTarget target);
BoundTarget parse_bound_target(std::string_view name);

/// Exact rational bound num/den.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct BoundCertificate {
  BoundTarget target{};
  int order = 0;
  /// Optimal dominating set the construction starts from.
  DominationCertificate dominating;
  /// One external private neighbor per member of D; empty when D is small
  /// enough to be used directly.
  VertexSet selected_private_neighbors;
  /// The power dominating set produced.
  VertexSet power_set;
  int pt = 0;
  Fraction bound;
  std::uint64_t value = 0;
};

/// Chooses u_v from epn[v, D] given v and its (nonempty) epn set.
using EpnChoice = std::function<Vertex(Vertex v, const VertexSet& candidates)>;

/// Least-label choice.
Vertex least_label_choice(Vertex v, const VertexSet& candidates);

/// A = {u_v : v in D}. Throws std::logic_error if some epn set is empty.
VertexSet select_private_neighbors(const Graph& g, const VertexSet& d, const EpnChoice& choose = least_label_choice);

/// Runs the dominating-set construction and measures the resulting power
/// dominating set. Throws std::invalid_argument for disconnected graphs or
/// orders below the target's hypothesis, std::logic_error if a structural
/// guarantee fails.
BoundCertificate construct_pd_certificate(const Graph& g, BoundTarget target,
                                          const EpnChoice& choose = least_label_choice);

enum class EqualityStatus {
  /// th^x_gammaP(G) < 6n/7.
  Vacuous,
  /// Equality holds and gamma(G) = 3n/7.
  Holds,
  /// Equality holds but gamma(G) != 3n/7.
  Violated,
};

struct EqualityReport {
  int order = 0;
  int gamma = 0;
  std::uint64_t product_throttling = 0;
  EqualityStatus status = EqualityStatus::Vacuous;
  /// gamma(G) = 3n/7 while th^x_gammaP(G) < 6n/7.
  bool converse_counterexample = false;
};

std::string_view to_string(EqualityStatus status);

/// Checks that 6n/7 equality forces gamma(G) = 3n/7. Connected graphs only.
EqualityReport check_six_sevenths_equality(const Graph& g);

}  // namespace throttle
