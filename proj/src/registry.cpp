#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "checks/checks.hpp"
#include "exrings/theorems.hpp"

namespace exrings {

namespace {

using M = VerifyMode;
constexpr M kExh = M::ProvedExhaustive;
constexpr M kWin = M::VerifiedInWindow;
constexpr M kRnd = M::Randomized;

std::vector<TheoremEntry> build_registry() {
  namespace c = checks;
  return {
      {"lem2", "[a, [b, RC]] = 0 forces a in Cb + C", {{"m2-gf2", kExh}, {"m2-gf3", kExh}, {"m2-gf4", kExh}, {"m2-rat2", kRnd}}, c::check_lem2},
      {"lem5", "subrings of M2(F) containing a noncentral element", {{"m2-gf2", kExh}, {"m2-gf4", kExh}}, c::check_lem5},
      {"lem6", "trace-zero, commutator-space and span membership agree",
       {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-rat2", kRnd}, {"m2-poly2", kRnd}, {"m2-tpoly2", kRnd}}, c::check_lem6},
      {"lem8", "spans and brackets of Lie ideals", {{"m2-gf2", kExh}, {"m2-gf3", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kWin}}, c::check_lem8},
      {"lem10", "[M2(gS), R] for pairs of ideal generators", {{"m2-poly2", kWin}}, c::check_lem10},
      {"lem11", "[a, [RC, RC]] central iff a central",
       {{"m2-gf2", kExh}, {"m2-gf3", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kRnd}, {"m2-rat2", kRnd}}, c::check_lem11},
      {"lem14", "d = ad_g with g in [RC, RC] iff d([R, R]) central", {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kRnd}}, c::check_lem14},
      {"lem17", "sums of iterated brackets vanishing on [RC, RC]", {{"m2-gf2", kExh}, {"m2-rat2", kRnd}}, c::check_lem17},
      {"lem18", "families of abelian Lie ideals moved by an X-outer derivation", {{"m2-rat2", kRnd}}, c::check_lem18},
      {"lem19", "Lie ideals of exceptional rings and their spans", {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kWin}}, c::check_lem19},
      {"lem20", "[[RC, RC], [RC, RC]] central iff exceptional",
       {{"m2-gf2", kExh}, {"m2-gf3", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kWin}, {"m2-rat2", kExh}}, c::check_lem20},
      {"lem21", "Engel subgroups of [R, R]", {{"m2-gf2", kExh}, {"m2-gf3", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kWin}}, c::check_lem21},
      {"lem22", "Engel spans of noncentral Lie ideals", {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-rat2", kExh}}, c::check_lem22},
      {"lem23", "abelian or Type I Lie ideals", {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kWin}}, c::check_lem23},
      {"thm16", "[A, [R, R]] in A iff Z(R) in A in [R, R] or [R, R] in A", {{"m2-gf2", kExh}, {"m2-gf4", kExh}}, c::check_thm16},
      {"thm19", "[A, L] in A for a nonabelian Lie ideal L", {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kWin}}, c::check_thm19},
      {"thm23", "A contains a proper Lie ideal or AC = Ca + C", {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kWin}}, c::check_thm23},
      {"thm24", "the subring generated by [R, R] is R", {{"m2-gf2", kExh}, {"m2-gf3", kExh}, {"m2-gf4", kExh}}, c::check_thm24},
      {"thm25", "[a_1, ..., a_n, [R, R]] central iff some a_i in [RC, RC]", {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kRnd}}, c::check_thm25},
      {"thm28", "[a_1, ..., a_n, R] central, first n - 1 positions", {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kRnd}}, c::check_thm28},
      {"thm29", "delta d([I, I]) central for derivations", {{"m2-poly2", kRnd}}, c::check_thm29},
      {"thm31", "[a_1, ..., a_n, R] central, last n - 1 positions", {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kRnd}}, c::check_thm31},
      {"thm32", "generalized linear maps vanishing on [RC, RC]", {{"m2-gf2", kExh}, {"m2-gf3", kExh}, {"m2-rat2", kRnd}}, c::check_thm32},
      {"thm34", "delta d(L) central on an abelian Lie ideal", {{"m2-rat2", kRnd}}, c::check_thm34},
      {"thm35", "delta d(R) central for derivations", {{"m2-poly2", kRnd}}, c::check_thm35},
      {"thm36", "[a_1, ..., a_n, L] central by Lie ideal class", {{"m2-gf2", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kRnd}}, c::check_thm36},
      {"thm37", "[E_m(L)^+, E_k(L)^+] = 0 iff L in [RC, RC]", {{"m2-gf2", kExh}, {"m2-gf3", kExh}, {"m2-gf4", kExh}, {"m2-poly2", kWin}}, c::check_thm37},
      {"ex2", "a^2 = 0 and a in [RC, RC] but not in [R, R]", {{"m2-tpoly2", kWin}}, c::check_ex2},
      {"ex3", "[A, [R, R]] = S1 with AC = [RC, RC]", {{"m2-poly2", kWin}}, c::check_ex3},
      {"ex4", "[R, R] + Z2 e11 is Type II without nonzero ideals", {{"m2-poly2", kWin}}, c::check_ex4},
      {"remark1", "d(L) in L while d(beta) e12 separates", {{"m2-poly2", kWin}}, c::check_remark1},
  };
}

std::string_view short_mode(VerifyMode m) {
  switch (m) {
    case VerifyMode::ProvedExhaustive: return "exhaustive";
    case VerifyMode::VerifiedInWindow: return "window";
    case VerifyMode::Randomized: return "randomized";
  }
  return "";
}

const ContextSupport* find_support(const TheoremEntry& e, const std::string& ring) {
  for (const auto& c : e.contexts)
    if (c.ring == ring) return &c;
  return nullptr;
}

Verdict timed(const TheoremEntry& e, const RingContext& ctx, const RunConfig& config, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v = e.run(ctx, config);
  if (timing)
    v.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  else
    v.elapsed_ms = 0;
  return v;
}

}  // namespace

const std::vector<TheoremEntry>& registry() {
  static const std::vector<TheoremEntry> entries = build_registry();
  return entries;
}

const TheoremEntry* find_theorem(std::string_view id) {
  for (const auto& e : registry())
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<Job> plan_jobs(const std::vector<std::string>& ids, const std::optional<std::string>& ring) {
  std::optional<RingContext> filter;
  if (ring) {
    try {
      filter = RingContext::parse(*ring);
    } catch (const std::exception& e) {
      throw UnsupportedError("unknown ring spec: " + *ring);
    }
  }
  std::vector<Job> jobs;
  auto add = [&](const TheoremEntry& e, bool strict) {
    if (filter) {
      const std::string name = filter->to_string();
      if (find_support(e, name)) {
        jobs.push_back({&e, *filter});
      } else if (strict) {
        throw UnsupportedError(e.id + " does not support " + name);
      }
      return;
    }
    for (const auto& c : e.contexts) jobs.push_back({&e, RingContext::parse(c.ring)});
  };
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& e : registry()) add(e, false);
      continue;
    }
    const TheoremEntry* e = find_theorem(id);
    if (!e) throw UnsupportedError("unknown theorem id: " + id);
    add(*e, true);
  }
  if (jobs.empty()) throw UnsupportedError("no checker supports the requested selection");
  return jobs;
}

std::vector<Verdict> run_jobs(const std::vector<Job>& jobs, const RunConfig& config, int workers, bool timing) {
  std::vector<Verdict> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = timed(*jobs[i].entry, jobs[i].context, config, timing);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Verdict run_one(std::string_view id, const RingContext& ctx, const RunConfig& config) {
  const TheoremEntry* e = find_theorem(id);
  if (!e) throw UnsupportedError("unknown theorem id: " + std::string(id));
  if (!find_support(*e, ctx.to_string())) throw UnsupportedError(e->id + " does not support " + ctx.to_string());
  return e->run(ctx, config);
}

Json report_json(const std::vector<Verdict>& verdicts, const RunConfig& config) {
  Json j;
  j["verdicts"] = Json::array();
  bool all = true;
  for (const auto& v : verdicts) {
    j["verdicts"].push_back(v.to_json());
    all = all && v.passed();
  }
  j["all_passed"] = all;
  j["config"] = {{"degree", config.degree}, {"seed", config.seed}, {"samples", config.samples}};
  return j;
}

std::string report_text(const std::vector<Verdict>& verdicts) {
  std::ostringstream os;
  long failed = 0;
  for (const auto& v : verdicts) {
    os << (v.passed() ? "PASS " : "FAIL ") << v.theorem << " [" << v.config.value("ring", std::string("?")) << "] "
       << to_string(v.mode) << " cases=" << v.cases_total << " failed=" << v.cases_failed;
    if (v.elapsed_ms > 0) os << " time=" << v.elapsed_ms << "ms";
    os << '\n';
    for (const auto& w : v.witnesses) os << "  witness: " << w.dump() << '\n';
    for (const auto& c : v.counterexamples) os << "  counterexample: " << c.dump() << '\n';
    if (!v.passed()) ++failed;
  }
  os << verdicts.size() - static_cast<std::size_t>(failed) << "/" << verdicts.size() << " verdicts passed\n";
  return os.str();
}

Json registry_json() {
  Json j = Json::array();
  for (const auto& e : registry()) {
    Json ctxs = Json::array();
    for (const auto& c : e.contexts) ctxs.push_back({{"ring", c.ring}, {"mode", std::string(to_string(c.mode))}});
    j.push_back({{"id", e.id}, {"summary", e.summary}, {"contexts", ctxs}});
  }
  return j;
}

std::string registry_text() {
  std::ostringstream os;
  for (const auto& e : registry()) {
    os << e.id << "  ";
    for (std::size_t i = 0; i < e.contexts.size(); ++i)
      os << (i ? ", " : "") << e.contexts[i].ring << " (" << short_mode(e.contexts[i].mode) << ")";
    os << "\n    " << e.summary << '\n';
  }
  return os.str();
}

}  // namespace exrings
