#include <optional>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ipdhyp/cli.hpp"
#include "ipdhyp/verify.hpp"

namespace py = pybind11;
using namespace ipd;

namespace {

ParamVector parse_list(const std::vector<std::string>& items) {
  ParamVector out;
  for (const auto& s : items) out.push_back(Complex::parse(s));
  return out;
}

ParamsFile parse_params(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return params_file_from_json(j);
}

std::string eval(const std::vector<std::string>& num, const std::vector<std::string>& den, const std::string& x,
                 const std::optional<std::string>& tol) {
  EvalOptions options;
  if (tol) options.tol = parse_real(*tol);
  const HypFunction fun{parse_list(num), parse_list(den)};
  const Complex z = Complex::parse(x);
  const EvalResult r = eval_pfq(fun, z, options);
  Json j{{"function", to_json(fun)},
         {"x", complex_to_json(z)},
         {"digits", Precision::digits()},
         {"value", complex_to_json(r.value)},
         {"terms_used", r.terms_used},
         {"tail_bound", format_real(r.tail_bound, 6)}};
  return j.dump();
}

std::string transform(const std::string& theorem, const std::string& params, const std::string& route,
                      const std::optional<std::string>& x) {
  const Transformation t = build_theorem(theorem, parse_params(params), route);
  Json j{{"theorem", theorem}, {"digits", Precision::digits()}, {"transformation", to_json(t)}};
  if (x) {
    const Complex z = Complex::parse(*x);
    const Complex left = eval_pfq(t.lhs, z).value;
    const Complex right = t.rhs.evaluate(z);
    j["x"] = complex_to_json(z);
    j["lhs_value"] = complex_to_json(left);
    j["rhs_value"] = complex_to_json(right);
    j["residual"] = format_real(abs(left - right) / std::max(Real(1), abs(left)), 6);
  }
  return j.dump();
}

std::string charpoly(const std::string& which, const std::string& params, const std::string& route) {
  const CPoly poly = build_polynomial(which, parse_params(params), route);
  Json j{{"which", which}, {"digits", Precision::digits()}, {"polynomial", to_json(poly)}};
  j["roots"] = !poly.is_zero() && poly.degree() >= 1 ? to_json(find_roots(poly)) : Json{{"roots", Json::array()}};
  return j.dump();
}

std::string verify(const std::optional<std::vector<std::string>>& ids, std::uint64_t seed, int count,
                   const std::optional<std::string>& tol, bool wall_time) {
  SuiteOptions options;
  if (ids) {
    for (const auto& id : *ids) options.ids.push_back(parse_identity(id));
  } else {
    options.ids = all_identities();
  }
  options.seed = seed;
  options.count = count;
  if (tol) options.tol = parse_real(*tol);
  return run_suite(options).to_json(wall_time).dump();
}

std::string samples(const std::string& id, std::uint64_t seed, int count) {
  Json out = Json::array();
  for (const auto& c : sample_params(parse_identity(id), seed, count)) {
    out.push_back(Json{{"index", c.index}, {"params", to_json(c.params)}, {"x_samples", params_to_json(ParamVector(c.x_samples))}});
  }
  return out.dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_dispatch(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_ipdhyp, m) {
  m.doc() = "Miller-Paris transformations of IPD hypergeometric functions";
  py::register_exception<Error>(m, "IpdError", PyExc_ValueError);

  m.def("digits", &Precision::digits);
  m.def("set_digits", &Precision::set_digits, py::arg("digits"));
  m.def("identities", [] {
    std::vector<std::string> out;
    for (IdentityId id : all_identities()) out.push_back(to_string(id));
    return out;
  });
  m.def("eval_pfq", &eval, py::arg("num"), py::arg("den"), py::arg("x"), py::arg("tol") = std::nullopt);
  m.def("transform", &transform, py::arg("theorem"), py::arg("params"), py::arg("route") = "",
        py::arg("x") = std::nullopt);
  m.def("charpoly", &charpoly, py::arg("which"), py::arg("params"), py::arg("route") = "");
  m.def("verify", &verify, py::arg("ids") = std::nullopt, py::arg("seed") = SuiteOptions{}.seed, py::arg("count") = 0,
        py::arg("tol") = std::nullopt, py::arg("wall_time") = true);
  m.def("sample_params", &samples, py::arg("identity"), py::arg("seed"), py::arg("count"));
  m.def("cli", &cli, py::arg("args"));
}
