#include "ipdhyp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "ipdhyp/verify.hpp"

namespace ipd {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

/// "RE,IM" or "re+imi".
Complex parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 2) return Complex(parse_real(trim(parts[0])), parse_real(trim(parts[1])));
  if (parts.size() == 1) return Complex::parse(trim(parts[0]));
  throw Error(ErrorKind::ParseError, "expected RE,IM or re+imi, got '" + text + "'");
}

ParamVector parse_list(const std::string& text) {
  ParamVector v;
  for (const auto& item : split(text, ',')) v.push_back(Complex::parse(trim(item)));
  return v;
}

struct TransformArgs {
  std::string theorem;
  std::string params;
  std::string x;
  std::string route;
};

struct EvalArgs {
  std::string num;
  std::string den;
  std::string x;
};

struct CharpolyArgs {
  std::string which;
  std::string params;
  std::string route;
};

struct VerifyArgs {
  std::optional<std::string> only;
  std::uint64_t seed = SuiteOptions{}.seed;
  int count = 0;
  std::string tol;
  std::string json;
};

int run_transform(const TransformArgs& a, std::ostream& out) {
  const ParamsFile params = load_params_file(a.params);
  const Transformation t = build_theorem(a.theorem, params, a.route);
  Json j{{"theorem", a.theorem}, {"digits", Precision::digits()}};
  if (!a.route.empty()) j["route"] = a.route;
  j["transformation"] = to_json(t);
  if (!a.x.empty()) {
    const Complex x = parse_point(a.x);
    const Complex left = eval_pfq(t.lhs, x).value;
    const Complex right = t.rhs.evaluate(x);
    j["x"] = complex_to_json(x);
    j["lhs_value"] = complex_to_json(left);
    j["rhs_value"] = complex_to_json(right);
    j["residual"] = format_real(abs(left - right) / std::max(Real(1), abs(left)), 6);
  }
  out << j.dump(2) << "\n";
  return 0;
}

int run_eval(const EvalArgs& a, std::ostream& out) {
  const HypFunction fun{parse_list(a.num), parse_list(a.den)};
  const Complex x = parse_point(a.x);
  const EvalResult r = eval_pfq(fun, x);
  Json j{{"function", to_json(fun)},
         {"x", complex_to_json(x)},
         {"digits", Precision::digits()},
         {"value", complex_to_json(r.value)},
         {"terms_used", r.terms_used},
         {"tail_bound", format_real(r.tail_bound, 6)}};
  out << j.dump(2) << "\n";
  return 0;
}

int run_charpoly(const CharpolyArgs& a, std::ostream& out) {
  const ParamsFile pf = load_params_file(a.params);
  const std::string& w = a.which;
  const CPoly poly = build_polynomial(w, pf, a.route);
  Json j{{"which", w}, {"digits", Precision::digits()}, {"polynomial", to_json(poly)}};
  if (!poly.is_zero() && poly.degree() >= 1) {
    j["roots"] = to_json(find_roots(poly));
  } else {
    j["roots"] = Json{{"roots", Json::array()}};
  }
  out << j.dump(2) << "\n";
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  if (a.only) {
    for (const auto& name : split(*a.only, ',')) {
      const std::string id = trim(name);
      if (!id.empty()) options.ids.push_back(parse_identity(id));
    }
  } else {
    options.ids = all_identities();
  }
  options.seed = a.seed;
  options.count = a.count;
  if (!a.tol.empty()) {
    const Real tol = parse_real(a.tol);
    if (tol < 0) throw Error(ErrorKind::InvalidArgument, "--tol must be non-negative");
    options.tol = tol;
  }

  const VerificationReport report = run_suite(options);
  for (const auto& r : report.identities) {
    out << to_string(r.id) << " " << (r.status() == CaseStatus::pass   ? "pass"
                                      : r.status() == CaseStatus::fail ? "FAIL"
                                                                       : "skipped")
        << " cases=" << r.cases.size() << " failed=" << r.count(CaseStatus::fail)
        << " skipped=" << r.count(CaseStatus::skipped) << " max_residual=" << format_real(r.max_residual(), 3)
        << " tol=" << format_real(r.tolerance, 3);
    if (!r.reason.empty()) out << " reason=" << r.reason;
    out << "\n";
  }
  out << "summary: " << report.identities.size() << " identities, exit " << report.exit_code() << "\n";

  if (!a.json.empty()) {
    std::ofstream file(a.json);
    if (!file) {
      err << "error: cannot write report to '" << a.json << "'\n";
      return kExitUsage;
    }
    file << report.to_json().dump(2) << "\n";
  }
  return report.exit_code();
}

bool is_usage_error(ErrorKind kind) {
  return kind == ErrorKind::ParseError || kind == ErrorKind::InvalidArgument || kind == ErrorKind::LengthMismatch;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Miller-Paris transformations of hypergeometric functions with integral parameter differences",
               "ipdhyp"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> digits;
  app.add_option("--digits", digits, "Decimal digits of precision (default 40, or $IPDHYP_DIGITS)");

  TransformArgs targs;
  auto* transform = app.add_subcommand("transform", "Apply a transformation to a parameter file");
  transform->add_option("--theorem", targs.theorem, "MP1, MP2, COR1, THM3_EQ19/20/26, THM4_EQ29/31, VEC_EQ27/28, THM5_FIRST/SECOND")->required();
  transform->add_option("--params", targs.params, "Parameter file (JSON)")->required();
  transform->add_option("--x", targs.x, "Evaluate both sides at RE,IM");
  transform->add_option("--route", targs.route, "paperQ|newP for MP1, paperQhat|newPhat for MP2");

  EvalArgs eargs;
  auto* eval = app.add_subcommand("eval", "Evaluate a generalized hypergeometric series");
  eval->add_option("--num", eargs.num, "Comma-separated top parameters")->required();
  eval->add_option("--den", eargs.den, "Comma-separated bottom parameters")->required();
  eval->add_option("--x", eargs.x, "Argument RE,IM or re+imi")->required();

  CharpolyArgs cargs;
  auto* charpoly = app.add_subcommand("charpoly", "Print a characteristic polynomial and its roots");
  charpoly->add_option("--which", cargs.which, "Polynomial")
      ->required()
      ->check(CLI::IsMember({"Q", "P", "Qhat", "Phat", "W", "T", "Tstar", "L", "Lhat"}));
  charpoly->add_option("--params", cargs.params, "Parameter file (JSON)")->required();
  charpoly->add_option("--route", cargs.route, "eq5|eq7 for Q");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
  verify->add_option("--only", vargs.only, "Comma-separated identity ids");
  verify->add_option("--seed", vargs.seed, "Sampler seed");
  verify->add_option("--count", vargs.count, "Cases per identity (0: per-identity default)")->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", vargs.tol, "Override every tolerance");
  verify->add_option("--json", vargs.json, "Write the JSON report to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!Precision::load_from_environment()) {
      err << "error: " << Precision::kEnvVar << " must be an integer >= " << Precision::kMinDigits << "\n";
      return kExitUsage;
    }
    if (digits) Precision::set_digits(*digits);

    if (*transform) return run_transform(targs, out);
    if (*eval) return run_eval(eargs, out);
    if (*charpoly) return run_charpoly(cargs, out);
    if (*verify) return run_verify(vargs, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.kind()) ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ipd
