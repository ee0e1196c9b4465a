#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gehrhart/ehrhart.hpp"
#include "gehrhart/errors.hpp"
#include "gehrhart/harmonic.hpp"
#include "gehrhart/serialize.hpp"
#include "verify.hpp"

namespace gehrhart::cli {

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  buffer << in.rdbuf();
  return buffer.str();
}

json one_based(const std::vector<int>& elements) {
  json out = json::array();
  for (int e : elements) out.push_back(e + 1);
  return out;
}

struct Options {
  std::string path;
  std::int64_t m = 1;
  bool interior = false;
  std::int64_t m_max = 3;
};

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
  const MatroidInput input = parse_matroid_input(read_input(opt.path));
  const RealizedMatroid m(input.realization);
  json doc;
  doc["command"] = command;
  if (input.name) doc["name"] = *input.name;
  int code = kOk;

  if (command == "tutte") {
    doc["tutte"] = to_json(tutte(m));
  } else if (command == "qcount") {
    if (opt.m < 0) throw ContractViolation("--m must be non-negative");
    doc["m"] = opt.m;
    doc["interior"] = opt.interior;
    doc["qcount"] = to_json(graded_count(m, opt.m, opt.interior).value);
  } else if (command == "ehrpoly") {
    doc["power"] = to_json(ehr_power_form(m));
    json basis = json::array();
    for (const auto& f : ehr_poly(m).basis_coeffs) basis.push_back(to_json(f));
    doc["qbinomial"] = basis;
  } else if (command == "series") {
    const RatSeries s = opt.interior ? interior_series(m) : series(m);
    doc["interior"] = opt.interior;
    doc["numerator"] = to_json(s.numerator);
    doc["order"] = s.order;
  } else if (command == "presentation") {
    const SegreGenerators gens = segre_generators(m);
    json listing = json::array();
    for (const auto& g : gens.linear) listing.push_back(format_generator(g));
    doc["linear"] = listing;
    doc["binomials"] = "z_S z_T - z_{S cup T} z_{S cap T} for all S, T subsets of [" + std::to_string(m.n()) + "]";
    doc["degree1_dim"] = degree1_dim(m);
  } else if (command == "gorenstein") {
    const GorensteinVerdict v = gorenstein_classify(m);
    doc["verdict"] = to_string(v.verdict);
    if (v.is_gorenstein()) {
      doc["palindrome"] = palindrome_check(m);
    } else {
      doc["witness"] = one_based(v.witness);
      const PolyTQ numerator = series(m).numerator;
      const int n = static_cast<int>(m.n());
      doc["palindrome"] = boolean_palindrome(numerator, n).passed ||
                          circuit_palindrome(numerator, n, static_cast<int>(m.d())).passed;
    }
  } else if (command == "verify") {
    json checks = json::array();
    bool failed = false;
    for (const auto& c : verify_suite(m, opt.m_max)) {
      json entry{{"name", c.name}, {"status", to_string(c.status)}};
      if (!c.detail.empty()) entry["detail"] = c.detail;
      failed = failed || c.status == Status::kFail;
      checks.push_back(std::move(entry));
    }
    doc["m_max"] = opt.m_max;
    doc["checks"] = checks;
    doc["status"] = failed ? "fail" : "pass";
    code = failed ? kCheckFailed : kOk;
  }
  out << doc.dump() << "\n";
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Ehrhart theory of unimodular zonotopes"};
  app.name("gehrhart");
  app.require_subcommand(1);
  Options opt;

  auto add = [&](const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("input", opt.path, "Matrix description (JSON); - reads standard input")->required();
    return sub;
  };
  add("tutte", "Tutte polynomial as [x_exp, y_exp, coeff] triples");
  CLI::App* qcount = add("qcount", "Graded lattice-point count of the m-th dilate");
  qcount->add_option("--m", opt.m, "Dilation factor")->required();
  qcount->add_flag("--interior", opt.interior, "Count interior points");
  add("ehrpoly", "Graded Ehrhart polynomial in the power and q-binomial bases");
  CLI::App* ser = add("series", "Numerator and order of the graded Ehrhart series");
  ser->add_flag("--interior", opt.interior, "Interior series");
  add("presentation", "Linear generators of the harmonic algebra and its degree-1 dimension");
  add("gorenstein", "Gorenstein verdict and palindromicity of the series numerator");
  CLI::App* verify = add("verify", "Run every cross-oracle check");
  verify->add_option("--m-max", opt.m_max, "Largest dilation checked")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "gehrhart: " << e.what() << "\n";
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, opt, out);
  } catch (const Error& e) {
    err << "gehrhart " << command << ": " << e.what() << "\n";
    return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gehrhart"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gehrhart::cli
