#include "throttle/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <thread>

namespace throttle {

int Report::passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const CaseRecord& r) { return r.pass; }));
}

int Report::failed() const { return static_cast<int>(records.size()) - passed(); }

void Report::sort_records() {
  std::stable_sort(records.begin(), records.end(), [](const CaseRecord& a, const CaseRecord& b) { return a.id < b.id; });
}

Json to_json(const Report& report) {
  Json records = Json::array();
  for (const CaseRecord& r : report.records) {
    Json rec = {
        {"id", r.id},           {"graph", r.graph},   {"inputs", r.inputs}, {"expected", r.expected},
        {"computed", r.computed}, {"pass", r.pass},
    };
    if (!r.witness.empty()) rec["witness"] = r.witness;
    if (!r.tags.empty()) rec["tags"] = r.tags;
    records.push_back(std::move(rec));
  }
  return {
      {"schema", kReportSchema},
      {"suite", report.suite},
      {"version", report.version},
      {"summary", {{"total", report.records.size()}, {"passed", report.passed()}, {"failed", report.failed()}}},
      {"wall_seconds", report.wall_seconds},
      {"records", records},
  };
}

void print_table(std::ostream& out, const Report& report, bool failures_only) {
  std::size_t id_width = 4;
  for (const CaseRecord& r : report.records) id_width = std::max(id_width, r.id.size());
  id_width = std::min<std::size_t>(id_width, 48);
  for (const CaseRecord& r : report.records) {
    if (failures_only && r.pass) continue;
    out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(id_width)) << r.id
        << "  expected " << r.expected << "  computed " << r.computed;
    if (!r.pass && !r.witness.empty()) out << "  witness " << r.witness;
    out << '\n';
  }
  out << report.suite << ": " << report.passed() << " passed, " << report.failed() << " failed ("
      << std::fixed << std::setprecision(2) << report.wall_seconds << " s)\n";
}

int worker_count() {
  if (const char* env = std::getenv("THROTTLE_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& task) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace throttle
