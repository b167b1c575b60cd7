#pragma once

// Checker registry and the concurrent runner behind `verify`.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exrings/matrix.hpp"
#include "exrings/verdict.hpp"

namespace exrings {

/// Unknown theorem ids and unsupported theorem/context pairs.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Checker = std::function<Verdict(const RingContext&, const RunConfig&)>;

struct ContextSupport {
  std::string ring;  ///< ring spec string, e.g. "m2-gf2"
  VerifyMode mode;
};

struct TheoremEntry {
  std::string id;
  std::string summary;
  std::vector<ContextSupport> contexts;
  Checker run;
};

/// Every checker, in a fixed order.
const std::vector<TheoremEntry>& registry();
const TheoremEntry* find_theorem(std::string_view id);

struct Job {
  const TheoremEntry* entry;
  RingContext context;
};

/// Expands ids ("all" selects every entry) against an optional ring filter.
/// An explicit id with an unsupported ring throws UnsupportedError; with
/// "all" the ring acts as a filter.
std::vector<Job> plan_jobs(const std::vector<std::string>& ids, const std::optional<std::string>& ring);

/// Runs the jobs on `workers` threads. Results come back in job order and do
/// not depend on the worker count. elapsed_ms stays 0 unless `timing`.
std::vector<Verdict> run_jobs(const std::vector<Job>& jobs, const RunConfig& config, int workers, bool timing);

/// Single checker on a single context, on the calling thread.
Verdict run_one(std::string_view id, const RingContext& ctx, const RunConfig& config);

Json report_json(const std::vector<Verdict>& verdicts, const RunConfig& config);
std::string report_text(const std::vector<Verdict>& verdicts);
Json registry_json();
std::string registry_text();

}  // namespace exrings
