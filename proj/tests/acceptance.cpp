#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "exrings/derivation.hpp"
#include "exrings/finite_ring.hpp"
#include "exrings/glmap.hpp"
#include "exrings/linear_space.hpp"
#include "exrings/sampling.hpp"
#include "exrings/subgroup.hpp"
#include "exrings/theorems.hpp"

using namespace exrings;

namespace {

std::int64_t gaussian_binomial(int n, int k, std::int64_t q) {
  std::int64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    std::int64_t qn = 1, qd = 1;
    for (int j = 0; j < n - i; ++j) qn *= q;
    for (int j = 0; j < i + 1; ++j) qd *= q;
    num *= qn - 1;
    den *= qd - 1;
  }
  return num / den;
}

std::int64_t all_subspaces(int n, std::int64_t q) {
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
  return total;
}

struct Timed {
  Verdict verdict;
  double seconds;
};

Timed timed(const std::string& id, const std::string& ring, const RunConfig& cfg = {}) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v = run_one(id, RingContext::parse(ring), cfg);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return {std::move(v), dt.count()};
}

bool passes(const std::string& id, const std::string& ring, const RunConfig& cfg = {}) {
  return run_one(id, RingContext::parse(ring), cfg).passed();
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  if (pclose(pipe) != 0) out += "\n<nonzero exit>";
  return out;
}

bool criterion1(std::string& note) {
  const Timed t = timed("thm16", "m2-gf2");
  const std::int64_t expected = all_subspaces(4, 2);
  note = "subspaces=" + std::to_string(t.verdict.config["subspaces"].get<std::int64_t>()) + "/" + std::to_string(expected) +
         " failed=" + std::to_string(t.verdict.cases_failed) + " time=" + std::to_string(t.seconds) + "s";
  return t.verdict.passed() && t.verdict.config["subspaces"] == expected && t.seconds < 1.0 &&
         t.verdict.mode == VerifyMode::ProvedExhaustive;
}

bool criterion2(std::string& note) {
  const Timed t = timed("thm16", "m2-gf4");
  const std::int64_t expected = all_subspaces(8, 2);
  note = "subspaces=" + std::to_string(t.verdict.config["subspaces"].get<std::int64_t>()) + "/" + std::to_string(expected) +
         " failed=" + std::to_string(t.verdict.cases_failed) + " time=" + std::to_string(t.seconds) + "s";
  return t.verdict.passed() && t.verdict.config["subspaces"] == expected && t.seconds < 600.0;
}

bool criterion3(std::string& note) {
  const Verdict gf2 = run_one("lem6", RingContext::parse("m2-gf2"), {});
  const Verdict gf4 = run_one("lem6", RingContext::parse("m2-gf4"), {});
  const Verdict rat = run_one("lem6", RingContext::parse("m2-rat2"), {});
  note = "cases gf2=" + std::to_string(gf2.cases_total) + " gf4=" + std::to_string(gf4.cases_total) +
         " rat2=" + std::to_string(rat.cases_total);
  return gf2.passed() && gf4.passed() && rat.passed() && gf2.cases_total == 16 && gf4.cases_total == 256 &&
         rat.cases_total >= 10000;
}

bool criterion4(std::string& note) {
  const RingContext ctx = RingContext::parse("m2-poly2");
  const AdditiveSubgroup a(ctx, {TaggedGenerator::poly_full(Matrix::identity(ctx)),
                                 TaggedGenerator::bits(Matrix::unit(ctx, 1, 2)),
                                 TaggedGenerator::bits(Matrix::unit(ctx, 2, 1))});
  const AdditiveSubgroup s1(ctx, {TaggedGenerator::poly_full(Matrix::identity(ctx))});
  bool ok = true;
  for (int n : {8, 16}) ok = ok && slice(bracket_subgroup(a, commutator_subgroup(ctx), n), n) == slice(s1, n);
  const CSubspace span = c_span(a);
  ok = ok && span == CSubspace::commutators(ctx.central_closure()) && span.dimension() == 3;
  note = "slices N=8,16 and dim " + std::to_string(span.dimension());
  return ok && passes("ex3", "m2-poly2", RunConfig{8, 0, 1000});
}

bool criterion5(std::string& note) {
  const RingContext ctx = RingContext::parse("m2-tpoly2");
  const Matrix a = Matrix::parse(ctx, "[[t, t],[t, t]]");
  const bool ok = (a * a).is_zero() && in_commutator_space(a) && !contains(commutator_subgroup(ctx), a, 8);
  note = "a^2=0, tr a=0, a outside [R,R] at N=8";
  return ok && passes("ex2", "m2-tpoly2");
}

bool criterion6(std::string& note) {
  const RingContext ctx = RingContext::parse("m2-poly2");
  AdditiveSubgroup l = commutator_subgroup(ctx);
  l.add(TaggedGenerator::bits(Matrix::unit(ctx, 1, 1)));
  const bool type2 = classify_lie_ideal(l, 16) == LieIdealClass::TypeII;
  const TruncatedSlice s = slice(l, 16);
  int members = 0, checked = 0;
  bool only_one = true;
  for (std::uint64_t code = 1; code < 512; ++code, ++checked) {
    const Poly g = Poly::from_bits(code);
    const bool in = s.contains(Scalar(g) * Matrix::unit(ctx, 1, 1));
    members += in;
    if (in && !g.is_one()) only_one = false;
  }
  note = "TypeII=" + std::string(type2 ? "yes" : "no") + " g checked=" + std::to_string(checked) +
         " members=" + std::to_string(members);
  return type2 && only_one && members == 1 && passes("ex4", "m2-poly2");
}

bool criterion7(std::string& note) {
  const RingContext ctx = RingContext::parse("m2-poly2");
  const AdditiveSubgroup e2 = engel_subgroup(commutator_subgroup(ctx), 2, 8);
  const bool zero = slice(bracket_subgroup(e2, e2, 8), 8).dimension() == 0;
  const Verdict v = run_one("thm37", ctx, {});
  bool witness = false;
  for (const auto& w : v.witnesses)
    if (w.value("L", "") == "[R,R]+Z2e11" && w.value("m", 0) == 2 && w.value("k", 0) == 1 && w.value("samples", 101) <= 100)
      witness = true;
  note = "[E2,E2]=0: " + std::string(zero ? "yes" : "no") + ", (2,1) witness: " + (witness ? "yes" : "no");
  return zero && witness && v.passed();
}

bool criterion8(std::string& note) {
  const RingContext ctx = RingContext::parse("m2-poly2");
  const DerivationExpr dt = DerivationExpr::dt();
  Operator zero = [](const Matrix& x) { return Matrix::zero(x.context()); };
  const bool square = operators_equal(compose(as_operator(dt), as_operator(dt)), zero, ctx);
  const Verdict v = run_one("thm29", ctx, {});
  bool trivial = false;
  for (const auto& w : v.witnesses)
    if (w.value("delta", "") == "dt" && w.value("beta", "") == "t" && w.value("mu", "") == "0" &&
        w.value("g", "") == "[[0,0],[0,0]]" && w.value("h", "") == "[[0,0],[0,0]]")
      trivial = true;
  Rng rng(2024);
  int vanished = 0;
  for (int i = 0; i < 1000; ++i) {
    const Scalar g(random_nonzero_poly(rng, 2));
    const Matrix x = (g * random_matrix(rng, ctx, 3)).lift_to(ctx);
    const Matrix y = (g * random_matrix(rng, ctx, 3)).lift_to(ctx);
    vanished += apply_derivation(dt, apply_derivation(dt, commutator(x, y))).is_zero();
  }
  note = "d^2=0: " + std::string(square ? "yes" : "no") + ", witnesses (t,0,0,0): " + (trivial ? "yes" : "no") +
         ", vanishing samples=" + std::to_string(vanished) + "/1000";
  return square && trivial && vanished == 1000 && v.passed();
}

bool criterion9(std::string& note) {
  const RingContext ctx = RingContext::parse("m2-rat2");
  Rng rng(909);
  auto random_map = [&] {
    std::vector<GLMap::Term> terms;
    const int k = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < k; ++i) terms.emplace_back(random_matrix(rng, ctx, 2), random_matrix(rng, ctx, 2));
    return GLMap(ctx, terms);
  };
  int laws = 0;
  for (int i = 0; i < 1000; ++i) {
    const GLMap phi = random_map();
    const GLMap eta = random_map();
    laws += compose(phi, eta).star().equals(compose(eta.star(), phi.star())) && phi.star().star().equals(phi);
  }
  const Verdict v = run_one("thm32", ctx, {});
  note = "involution laws " + std::to_string(laws) + "/1000, flag cases=" + std::to_string(v.cases_total) +
         " failed=" + std::to_string(v.cases_failed);
  return laws == 1000 && v.passed();
}

bool criterion10(std::string& note) {
  const auto& fr = FiniteRing::get(FieldTag::GF2);
  const FiniteSubspace closure = fr.subring_closure(fr.commutators());
  const int size = 1 << closure.dimension();
  note = "closure size " + std::to_string(size);
  return size == 16 && passes("thm24", "m2-gf2");
}

bool criterion11(std::string& note) {
  const bool gf2 = passes("lem20", "m2-gf2");
  const bool gf4 = passes("lem20", "m2-gf4");
  const Verdict gf3 = run_one("lem20", RingContext::parse("m2-gf3"), {});
  const bool found = !gf3.witnesses.empty() && gf3.witnesses[0].contains("[x,y]");
  note = "gf2=" + std::string(gf2 ? "ok" : "fail") + " gf4=" + (gf4 ? "ok" : "fail") +
         " gf3 counterexample=" + (found ? gf3.witnesses[0]["[x,y]"].get<std::string>() : "none");
  return gf2 && gf4 && gf3.passed() && found;
}

bool criterion12(const std::string& cli, std::string& note) {
  if (cli.empty()) {
    note = "no CLI path given";
    return false;
  }
  const std::string base = "'" + cli + "' verify --theorem all --seed 42 --format json";
  const std::string a = capture(base + " --jobs 1");
  const std::string b = capture(base + " --jobs 4");
  note = "report bytes " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  return !a.empty() && a == b && a.find("<nonzero exit>") == std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    const char* title;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {"thm16 exhaustive on M2(GF(2))", criterion1},
      {"thm16 exhaustive on M2(GF(4))", criterion2},
      {"lem6 three-way agreement", criterion3},
      {"ex3 bracket slice equality at N=8,16", criterion4},
      {"ex2 square-zero element outside [R,R]", criterion5},
      {"ex4 Type II and g e11 membership", criterion6},
      {"thm37 vanishing and Type II witness", criterion7},
      {"thm29 with delta = d = dt", criterion8},
      {"GLMap involution laws and thm32 flags", criterion9},
      {"thm24 closure of [R,R] on M2(GF(2))", criterion10},
      {"lem20 exceptional and GF(3) sides", criterion11},
      {"determinism across worker counts", [&](std::string& note) { return criterion12(cli, note); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = criteria[i].run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].title << " (" << note << ")"
              << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
