#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "exrings/derivation.hpp"
#include "exrings/linear_space.hpp"
#include "exrings/subgroup.hpp"
#include "exrings/theorems.hpp"

namespace {

using namespace exrings;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct VerifyOptions {
  std::vector<std::string> theorems{"all"};
  std::string ring;
  RunConfig config;
  std::string format = "text";
  int jobs = 0;
  bool timing = false;
};

int cmd_verify(const VerifyOptions& opt) {
  std::optional<std::string> ring;
  if (!opt.ring.empty()) ring = opt.ring;
  std::vector<Job> jobs;
  try {
    jobs = plan_jobs(opt.theorems, ring);
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  const int workers = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<Verdict> verdicts;
  try {
    verdicts = run_jobs(jobs, opt.config, workers, opt.timing);
  } catch (const std::exception& e) {
    std::cerr << "error: checker aborted: " << e.what() << '\n';
    return kFailed;
  }
  bool ok = true;
  for (const auto& v : verdicts) ok = ok && v.passed();
  if (opt.format == "json") {
    std::cout << report_json(verdicts, opt.config).dump(2) << '\n';
  } else {
    std::cout << report_text(verdicts);
  }
  return ok ? kOk : kFailed;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string describe_span(const CSubspace& s) {
  const int dim = s.dimension();
  const CSubspace whole = CSubspace::whole(s.context());
  const CSubspace comm = CSubspace::commutators(s.context());
  std::string name = "LC";
  if (s == whole) name += " = RC";
  else if (s == comm) name += " = [RC,RC]";
  return name + " (dim " + std::to_string(dim) + ")";
}

int cmd_classify(const std::string& file, const std::string& ring, int degree, const std::string& format) {
  AdditiveSubgroup l(RingContext{});
  RingContext ctx;
  try {
    ctx = RingContext::parse(ring);
    l = AdditiveSubgroup::parse(ctx, read_file(file));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  Json out;
  out["ring"] = ctx.to_string();
  out["degree"] = degree;
  const LieIdealCheck check = check_lie_ideal(l, degree);
  out["is_lie_ideal"] = check.is_lie_ideal;
  int status = kOk;
  if (!check.is_lie_ideal) {
    out["classification"] = "not a Lie ideal";
    if (check.witness) {
      const auto& [x, r] = *check.witness;
      out["witness"] = {{"x", x.to_string()}, {"r", r.to_string()}, {"bracket", commutator(x, r).to_string()}};
    }
  } else {
    try {
      out["classification"] = std::string(to_string(classify_lie_ideal(l, degree)));
    } catch (const std::exception& e) {
      out["classification"] = "error";
      out["error"] = e.what();
      status = kFailed;
    }
  }
  const CSubspace span = c_span(l);
  Json basis = Json::array();
  for (const auto& b : span.basis()) basis.push_back(b.to_string());
  out["c_span_basis"] = basis;
  out["c_span_dim"] = span.dimension();
  if (format == "json") {
    std::cout << out.dump(2) << '\n';
    return status;
  }
  std::cout << out["classification"].get<std::string>();
  if (check.is_lie_ideal) std::cout << ", " << describe_span(span);
  std::cout << '\n';
  if (out.contains("witness"))
    std::cout << "witness: [" << out["witness"]["x"].get<std::string>() << ", " << out["witness"]["r"].get<std::string>()
              << "] = " << out["witness"]["bracket"].get<std::string>() << '\n';
  if (out.contains("error")) std::cout << "error: " << out["error"].get<std::string>() << '\n';
  std::cout << "C-span basis:";
  for (const auto& b : basis) std::cout << ' ' << b.get<std::string>();
  std::cout << '\n';
  return status;
}

int cmd_derivation(const std::string& ring, const std::string& expr, const std::vector<std::string>& points,
                   const std::string& format) {
  try {
    const RingContext ctx = RingContext::parse(ring);
    const DerivationExpr d = DerivationExpr::parse(ctx, expr);
    const DerivationNormalForm nf = normal_form(d, ctx);
    const XInnerResult x = is_x_inner(d, ctx);
    Json out;
    out["ring"] = ctx.to_string();
    out["derivation"] = d.to_string();
    out["normal_form"] = {{"c", nf.c.to_string()}, {"a", nf.a.to_string()}};
    out["x_inner"] = x.inner;
    if (x.witness) out["inner_witness"] = x.witness->to_string();
    if (x.beta) out["beta"] = x.beta->to_string();
    Json images = Json::array();
    for (const auto& p : points) {
      const Matrix m = Matrix::parse(ctx, p);
      images.push_back({{"x", m.to_string()}, {"d(x)", apply_derivation(d, m).to_string()}});
    }
    out["images"] = images;
    if (format == "json") {
      std::cout << out.dump(2) << '\n';
      return kOk;
    }
    std::cout << "derivation: " << d.to_string() << '\n'
              << "normal form: (" << nf.c.to_string() << ") dt + ad " << nf.a.to_string() << '\n'
              << "X-inner: " << (x.inner ? "yes" : "no");
    if (x.witness) std::cout << ", ad " << x.witness->to_string();
    if (x.beta) std::cout << ", d(" << x.beta->to_string() << ") != 0";
    std::cout << '\n';
    for (const auto& im : images)
      std::cout << "d(" << im["x"].get<std::string>() << ") = " << im["d(x)"].get<std::string>() << '\n';
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification workbench for exceptional prime rings"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run theorem checkers");
  verify->add_option("--theorem", vo.theorems, "Theorem ids, or all")->envname("EXRINGS_THEOREM")->delimiter(',');
  verify->add_option("--ring", vo.ring, "Ring spec, e.g. m2-gf2")->envname("EXRINGS_RING");
  verify->add_option("--degree", vo.config.degree, "Degree window N")->envname("EXRINGS_DEGREE")->check(CLI::Range(1, 60));
  verify->add_option("--seed", vo.config.seed, "Master seed")->envname("EXRINGS_SEED");
  verify->add_option("--samples", vo.config.samples, "Samples per checker")->envname("EXRINGS_SAMPLES")->check(CLI::PositiveNumber);
  verify->add_option("--format", vo.format, "Output format")->envname("EXRINGS_FORMAT")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", vo.jobs, "Worker threads (0 = hardware concurrency)")->envname("EXRINGS_JOBS")->check(CLI::NonNegativeNumber);
  verify->add_flag("--timing", vo.timing, "Record elapsed_ms (reports are then not byte-stable)")->envname("EXRINGS_TIMING");

  std::string gen_file;
  std::string cls_ring = "m2-poly2";
  int cls_degree = 8;
  std::string cls_format = "text";
  auto* classify = app.add_subcommand("classify", "Classify the additive subgroup given by a generator file");
  classify->add_option("generators", gen_file, "Generator file ('-' for stdin)")->required();
  classify->add_option("--ring", cls_ring, "Ring spec")->envname("EXRINGS_RING");
  classify->add_option("--degree", cls_degree, "Degree window N")->envname("EXRINGS_DEGREE")->check(CLI::Range(1, 60));
  classify->add_option("--format", cls_format, "Output format")->envname("EXRINGS_FORMAT")->check(CLI::IsMember({"text", "json"}));

  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "List checkers with their contexts and modes");
  list->add_option("--format", list_format, "Output format")->envname("EXRINGS_FORMAT")->check(CLI::IsMember({"text", "json"}));

  std::string der_ring = "m2-poly2";
  std::string der_expr;
  std::vector<std::string> der_points;
  std::string der_format = "text";
  auto* derivation = app.add_subcommand("derivation", "Normal form and X-inner test for a derivation");
  derivation->add_option("expr", der_expr, "Derivation, e.g. \"sum(dt, inner e11)\"")->required();
  derivation->add_option("--ring", der_ring, "Ring spec")->envname("EXRINGS_RING");
  derivation->add_option("--apply", der_points, "Matrix to evaluate on (repeatable)")->allow_extra_args(false);
  derivation->add_option("--format", der_format, "Output format")->envname("EXRINGS_FORMAT")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*verify) return cmd_verify(vo);
  if (*classify) return cmd_classify(gen_file, cls_ring, cls_degree, cls_format);
  if (*derivation) return cmd_derivation(der_ring, der_expr, der_points, der_format);
  if (*list) {
    if (list_format == "json")
      std::cout << registry_json().dump(2) << '\n';
    else
      std::cout << registry_text();
    return kOk;
  }
  return kInputError;
}
