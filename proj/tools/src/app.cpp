#include "fresnel_cli/app.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fresnel/errors.hpp"
#include "fresnel/fresnel_density.hpp"
#include "fresnel/mixture_analysis.hpp"
#include "fresnel/signed_measure.hpp"
#include "fresnel/special_fn.hpp"
#include "fresnel/stable_sampling.hpp"
#include "fresnel/subordination.hpp"
#include "fresnel_cli/suites.hpp"

#ifndef FRESNEL_VERSION
#define FRESNEL_VERSION "dev"
#endif

namespace fresnel::cli {
namespace {

// Shortest round-trip form, so tables are locale independent and reruns are
// byte-identical.
std::string number(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, r.ptr};
}

double parse_number(const std::string& s, const char* what) {
  if (s == "inf" || s == "+inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

struct Grid {
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 0;

  double node(std::size_t i) const {
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
};

Grid parse_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw std::invalid_argument("grid must be min:max:points, got '" + spec + "'");
  Grid g{parse_number(parts[0], "grid min"), parse_number(parts[1], "grid max"), 0};
  std::size_t used = 0;
  long long points = 0;
  try {
    points = std::stoll(parts[2], &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != parts[2].size() || points < 2) throw std::invalid_argument("grid needs an integer points >= 2");
  if (!(g.min < g.max) || !std::isfinite(g.min) || !std::isfinite(g.max)) {
    throw std::invalid_argument("grid needs finite min < max");
  }
  g.points = static_cast<std::size_t>(points);
  return g;
}

Box parse_box(const std::string& spec, double& time) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw std::invalid_argument("box must be t:lo:hi, got '" + spec + "'");
  time = parse_number(parts[0], "box time");
  return {parse_number(parts[1], "box lo"), parse_number(parts[2], "box hi")};
}

/// `# key=value` lines under a `# [command]` section. Stripping the leading
/// "# " from every line after the first gives a file --config accepts.
class Metadata {
 public:
  explicit Metadata(std::string command) : command_(std::move(command)) {}

  Metadata& add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
    return *this;
  }
  Metadata& add(const std::string& key, double value) { return add(key, number(value)); }
  Metadata& add(const std::string& key, std::uint64_t value) { return add(key, std::to_string(value)); }

  void write(std::ostream& os) const {
    os << "# fresnel " << FRESNEL_VERSION << '\n' << "# [" << command_ << "]\n";
    for (const auto& [k, v] : entries_) os << "# " << k << '=' << v << '\n';
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::filesystem::path target(path);
  if (target.is_relative()) {
    if (const char* dir = std::getenv("FRESNEL_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      target = std::filesystem::path(dir) / target;
    }
  }
  std::ofstream file(target, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open '" + target.string() + "' for writing");
  file << text;
  if (!file.flush()) throw OutputError("write to '" + target.string() + "' failed");
}

struct EvalArgs {
  std::string fn;
  double alpha = 2.0;
  double p = 0.5;
  double t = 1.0;
  double theta = 0.5;
  std::string grid;
};

std::string cmd_eval(const EvalArgs& a) {
  const Grid grid = parse_grid(a.grid);
  Metadata meta("eval");
  meta.add("fn", a.fn).add("alpha", a.alpha).add("t", a.t);
  std::function<double(double)> f;
  if (a.fn == "airy") {
    const GeneralizedAiry ai{AiryOrder(a.alpha)};
    f = [ai](double x) { return ai(x); };
  } else if (a.fn == "density") {
    const PseudoParams params{a.alpha, a.p, a.t};
    params.validate();
    f = [params](double x) { return density(x, params); };
    meta.add("p", a.p);
  } else if (a.fn == "mixture") {
    f = [a](double x) { return cauchy_mixture_pdf(x, a.alpha, a.p, a.t); };
    meta.add("p", a.p);
  } else {
    const SubordinationSpec spec{a.alpha, a.theta, a.p};
    spec.validate();
    f = [spec, t = a.t](double x) { return subordinated_density_quadrature(x, t, spec); };
    meta.add("p", a.p).add("theta", a.theta);
  }
  meta.add("grid", a.grid);

  std::ostringstream os;
  meta.write(os);
  os << "x,value\n";
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = grid.node(i);
    os << number(x) << ',' << number(f(x)) << '\n';
  }
  return os.str();
}

struct ValidateArgs {
  std::string suite;
  std::size_t n = 1'000'000;
  std::uint64_t seed = 7;
};

std::string cmd_validate(const ValidateArgs& a, bool& all_passed) {
  const auto checks = run_suite(a.suite, {a.n, a.seed});
  Metadata meta("validate");
  meta.add("suite", a.suite);
  if (a.suite == "cf-mc") meta.add("n", static_cast<std::uint64_t>(a.n)).add("seed", a.seed);
  std::ostringstream os;
  meta.write(os);
  os << "status,check,error,tolerance\n";
  std::size_t passed = 0;
  for (const Check& c : checks) {
    passed += c.passed;
    os << (c.passed ? "PASS" : "FAIL") << ",\"" << c.name << "\"," << number(c.error) << ','
       << number(c.tolerance) << '\n';
  }
  os << "# " << passed << '/' << checks.size() << " checks passed\n";
  all_passed = passed == checks.size();
  return os.str();
}

struct SampleArgs {
  bool mixture = false;
  bool stable = false;
  bool subordinator = false;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  double alpha = 2.0;
  double theta = 0.5;
  double p = 0.5;
  double t = 1.0;
  double nu = 1.5;
  double sigma = 1.0;
  double beta = 0.0;
  double mu = 0.0;
};

std::string cmd_sample(const SampleArgs& a) {
  if (a.mixture + a.stable + a.subordinator != 1) {
    throw std::invalid_argument("choose exactly one of --mixture, --stable, --subordinator");
  }
  if (a.n < 1) throw std::invalid_argument("--n must be >= 1");
  const SeededStream stream{a.seed, a.stream};
  Metadata meta("sample");
  std::vector<double> draws;
  if (a.mixture) {
    draws = sample_subordinated({a.alpha, a.theta, a.p}, a.t, a.n, stream);
    meta.add("mixture", "true").add("alpha", a.alpha).add("theta", a.theta).add("p", a.p);
  } else if (a.stable) {
    draws = sample_stable({a.nu, a.sigma, a.beta, a.mu}, a.t, a.n, stream);
    meta.add("stable", "true").add("nu", a.nu).add("sigma", a.sigma).add("beta", a.beta).add("mu", a.mu);
  } else {
    draws = sample_subordinator(a.theta, a.t, a.n, stream);
    meta.add("subordinator", "true").add("theta", a.theta);
  }
  meta.add("t", a.t).add("n", static_cast<std::uint64_t>(a.n)).add("seed", a.seed).add("stream", a.stream);
  std::ostringstream os;
  meta.write(os);
  os << "value\n";
  for (const double v : draws) os << number(v) << '\n';
  return os.str();
}

struct ShapeArgs {
  double alpha = 2.0;
  double p = 0.5;
  double t = 1.0;
};

std::string write_report(const ModalityReport& r, Metadata meta) {
  meta.add("kind", std::string(to_string(r.kind)));
  meta.add("near_critical", r.near_critical ? "true" : "false");
  std::ostringstream os;
  meta.write(os);
  os << "x,type,second_derivative,multiplicity\n";
  for (const StationaryPoint& s : r.stationary_points) {
    os << number(s.location) << ',' << to_string(s.type) << ',' << number(s.second_derivative) << ','
       << s.multiplicity << '\n';
  }
  return os.str();
}

std::string cmd_classify(const ShapeArgs& a) {
  Metadata meta("classify");
  meta.add("alpha", a.alpha).add("p", a.p).add("t", a.t);
  return write_report(classify(a.alpha, a.p, a.t), std::move(meta));
}

std::string cmd_modes(const ShapeArgs& a) {
  Metadata meta("modes");
  meta.add("alpha", a.alpha).add("t", a.t);
  return write_report(mode_analysis(a.alpha, a.t), std::move(meta));
}

struct InflectionArgs {
  double alpha = 0.0;  // 0 selects the critical order
  int sign = 1;
  double t = 1.0;
};

std::string cmd_inflection(const InflectionArgs& a) {
  const double alpha = a.alpha == 0.0 ? critical_alpha() : a.alpha;
  const InflectionParameters ip = inflection_parameters(alpha, a.sign);
  Metadata meta("inflection");
  meta.add("alpha", alpha).add("sign", std::to_string(a.sign)).add("t", a.t);
  std::ostringstream os;
  meta.write(os);
  os << "p,x,second_derivative\n";
  os << number(ip.p) << ',' << number(ip.x_star * a.t) << ',' << number(second_derivative_at_stationary(alpha, a.t))
     << '\n';
  return os.str();
}

struct MeasureArgs {
  double alpha = 2.0;
  double p = 0.5;
  double tol = 1e-9;
  std::vector<std::string> boxes;
};

std::string cmd_measure(const MeasureArgs& a) {
  CylinderEvent event;
  for (const std::string& b : a.boxes) {
    double time = 0.0;
    event.boxes.push_back(parse_box(b, time));
    event.times.push_back(time);
  }
  const double value = cylinder_measure(event, {a.alpha, a.p}, a.tol);
  Metadata meta("measure");
  meta.add("alpha", a.alpha).add("p", a.p).add("tol", a.tol);
  std::string joined;
  for (const std::string& b : a.boxes) joined += (joined.empty() ? "" : " ") + b;
  meta.add("box", joined);
  std::ostringstream os;
  meta.write(os);
  os << "value\n" << number(value) << '\n';
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fresnel pseudoprocess densities, subordination and Cauchy mixtures", "fresnel"};
  app.set_version_flag("--version", FRESNEL_VERSION);
  app.set_config("--config", "", "key=value file mirroring the flags ([command] sections)");
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "write here instead of stdout (relative to $FRESNEL_OUTPUT_DIR)");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "tabulate a function on a grid");
  eval_cmd->add_option("--fn", eval.fn)->required()->check(CLI::IsMember({"airy", "density", "mixture", "subordinated"}));
  eval_cmd->add_option("--alpha", eval.alpha);
  eval_cmd->add_option("--p", eval.p);
  eval_cmd->add_option("--t", eval.t);
  eval_cmd->add_option("--theta", eval.theta, "subordinator index (subordinated only)");
  eval_cmd->add_option("--grid", eval.grid, "min:max:points")->required();

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "run an identity suite; exit 1 if any check fails");
  std::vector<std::string> names(suite_names().begin(), suite_names().end());
  validate_cmd->add_option("--suite", validate.suite)->required()->check(CLI::IsMember(names));
  validate_cmd->add_option("--n", validate.n, "Monte Carlo sample size");
  validate_cmd->add_option("--seed", validate.seed);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "draw from the time-changed law, a stable law or the subordinator");
  sample_cmd->add_flag("--mixture", sample.mixture, "time-changed pseudoprocess (alpha, theta, p, t)");
  sample_cmd->add_flag("--stable", sample.stable, "stable law (nu, sigma, beta, mu, t)");
  sample_cmd->add_flag("--subordinator", sample.subordinator, "stable subordinator (theta, t)");
  sample_cmd->add_option("--n", sample.n)->required();
  sample_cmd->add_option("--seed", sample.seed)->required();
  sample_cmd->add_option("--stream", sample.stream);
  sample_cmd->add_option("--alpha", sample.alpha);
  sample_cmd->add_option("--theta", sample.theta);
  sample_cmd->add_option("--p", sample.p);
  sample_cmd->add_option("--t", sample.t);
  sample_cmd->add_option("--nu", sample.nu);
  sample_cmd->add_option("--sigma", sample.sigma);
  sample_cmd->add_option("--beta", sample.beta);
  sample_cmd->add_option("--mu", sample.mu);

  ShapeArgs shape;
  auto* classify_cmd = app.add_subcommand("classify", "stationary points of the Cauchy-mixture density");
  classify_cmd->add_option("--alpha", shape.alpha);
  classify_cmd->add_option("--p", shape.p);
  classify_cmd->add_option("--t", shape.t);
  auto* modes_cmd = app.add_subcommand("modes", "closed-form modes of the symmetric mixture");
  modes_cmd->add_option("--alpha", shape.alpha);
  modes_cmd->add_option("--t", shape.t);

  InflectionArgs inflection;
  auto* inflection_cmd = app.add_subcommand("inflection", "weight and location of the special stationary point");
  inflection_cmd->add_option("--alpha", inflection.alpha, "1 < alpha < 2; omitted: the critical order");
  inflection_cmd->add_option("--sign", inflection.sign)->check(CLI::IsMember({-1, 1}));
  inflection_cmd->add_option("--t", inflection.t);

  MeasureArgs measure;
  auto* measure_cmd = app.add_subcommand("measure", "signed measure of a cylinder event");
  measure_cmd->add_option("--alpha", measure.alpha);
  measure_cmd->add_option("--p", measure.p);
  measure_cmd->add_option("--tol", measure.tol);
  measure_cmd->add_option("--box", measure.boxes, "t:lo:hi, once per time; lo/hi may be -inf/inf")
      ->required()
      ->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArguments;
  }

  try {
    std::string text;
    int code = kOk;
    if (*eval_cmd) {
      text = cmd_eval(eval);
    } else if (*validate_cmd) {
      bool passed = false;
      text = cmd_validate(validate, passed);
      if (!passed) code = kSuiteFailed;
    } else if (*sample_cmd) {
      text = cmd_sample(sample);
    } else if (*classify_cmd) {
      text = cmd_classify(shape);
    } else if (*modes_cmd) {
      text = cmd_modes(shape);
    } else if (*inflection_cmd) {
      text = cmd_inflection(inflection);
    } else {
      text = cmd_measure(measure);
    }
    emit(text, output, out);
    return code;
  } catch (const InvalidArgument& e) {
    err << "fresnel: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::invalid_argument& e) {
    err << "fresnel: " << e.what() << '\n';
    return kBadArguments;
  } catch (const OutputError& e) {
    err << "fresnel: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::exception& e) {
    err << "fresnel: numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }
}

}  // namespace fresnel::cli
