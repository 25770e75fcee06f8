#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "throttle/serialize.hpp"

namespace throttle {

inline constexpr const char* kReportSchema = "throttle-report/1";

/// One checked case. Values are exact, so pass means expected == computed.
struct CaseRecord {
  std::string id;
  std::string graph;  // graph6
  std::string inputs;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string witness;
  std::map<std::string, std::string> tags;
};

struct Report {
  std::string suite;
  std::vector<CaseRecord> records;
  double wall_seconds = 0;
  std::string version = THROTTLE_VERSION;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  /// Stable order by id.
  void sort_records();
};

Json to_json(const Report& report);
void print_table(std::ostream& out, const Report& report, bool failures_only = false);

/// Worker count from THROTTLE_WORKERS, defaulting to the hardware concurrency.
int worker_count();

/// Runs task(i) for i in [0, count) on `workers` threads. Results are
/// written by index, so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& task);

}  // namespace throttle
