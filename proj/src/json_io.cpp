#include "ipdhyp/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ipd {

namespace {

Real real_from_json(const Json& j) {
  if (j.is_string()) return parse_real(j.get<std::string>());
  if (j.is_number_integer()) return Real(j.get<long long>());
  if (j.is_number()) {
    // Round-trip the double through its shortest decimal form.
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, j.get<double>());
    return parse_real(std::string_view(buf, res.ptr - buf));
  }
  throw Error(ErrorKind::ParseError, "expected a number, got " + j.dump());
}

int digits_or_default(int digits) { return digits > 0 ? digits : Precision::digits(); }

}  // namespace

Complex complex_from_json(const Json& j) {
  if (j.is_string()) return Complex::parse(j.get<std::string>());
  if (j.is_number()) return Complex(real_from_json(j));
  if (j.is_array() && j.size() == 2) return Complex(real_from_json(j[0]), real_from_json(j[1]));
  throw Error(ErrorKind::ParseError, "expected a complex number (\"re+imi\" or [re, im]), got " + j.dump());
}

Json complex_to_json(const Complex& z, int digits) {
  const int d = digits_or_default(digits);
  return Json::array({format_real(z.re, d), format_real(z.im, d)});
}

ParamVector params_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a list of complex numbers");
  ParamVector v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

IntVector ints_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a list of positive integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 1) {
      throw Error(ErrorKind::ParseError, "expected a positive integer, got " + e.dump());
    }
    out.push_back(e.get<int>());
  }
  return IntVector(std::move(out));
}

Json params_to_json(const ParamVector& v, int digits) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z, digits));
  return out;
}

const Complex& ParamsFile::scalar(const std::string& key) const {
  auto it = scalars.find(key);
  if (it == scalars.end()) throw Error(ErrorKind::ParseError, "parameter '" + key + "' is missing");
  return it->second;
}

IpdSpec ParamsFile::spec() const {
  IpdSpec s;
  if (has("a")) s.a = scalar("a");
  s.b = scalar("b");
  if (has("c")) {
    s.c = scalar("c");
  } else if (p) {
    s.c = s.b + *p;
  } else {
    throw Error(ErrorKind::ParseError, "parameter 'c' is missing");
  }
  s.f = f;
  s.m = m;
  s.validate();
  return s;
}

ParamsFile params_file_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "parameter file must hold a JSON object");
  ParamsFile pf;
  Json raw_b;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const Json& value = it.value();
    if (key == "f") {
      pf.f = params_from_json(value);
    } else if (key == "m") {
      pf.m = ints_from_json(value);
    } else if (key == "k") {
      if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw Error(ErrorKind::ParseError, "k must be a non-negative integer");
      }
      pf.k = value.get<int>();
    } else if (key == "p") {
      if (value.is_array()) {
        pf.p_vector = ints_from_json(value);
      } else if (value.is_number_integer() && value.get<long long>() >= 1) {
        pf.p = value.get<int>();
      } else {
        throw Error(ErrorKind::ParseError, "p must be a positive integer or a list of them");
      }
    } else if (key == "b") {
      raw_b = value;
    } else if (key == "a" || key == "b" || key == "c" || key == "d" || key == "e" || key == "alpha" ||
               key == "t") {
      pf.scalars[key] = complex_from_json(value);
    } else {
      throw Error(ErrorKind::ParseError, "unknown parameter '" + key + "'");
    }
  }
  if (pf.f.size() != pf.m.size()) {
    throw Error(ErrorKind::ParseError, "f and m must have the same length");
  }
  if (pf.p_vector) {
    if (raw_b.is_null()) throw Error(ErrorKind::ParseError, "a list p needs a list b");
    pf.b_vector = params_from_json(raw_b);
    if (pf.b_vector->size() != pf.p_vector->size()) {
      throw Error(ErrorKind::ParseError, "b and p lists must have the same length");
    }
    if (!pf.b_vector->empty()) pf.scalars["b"] = (*pf.b_vector)[0];
  } else if (!raw_b.is_null()) {
    pf.scalars["b"] = complex_from_json(raw_b);
  }
  return pf;
}

ParamsFile load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open parameter file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, "malformed JSON in '" + path + "': " + e.what());
  }
  return params_file_from_json(j);
}

Json to_json(const ParamsFile& params, int digits) {
  Json j = Json::object();
  for (const auto& [key, value] : params.scalars) {
    if ((key == "b" && params.b_vector) || (key == "a" && params.a_vector)) continue;
    j[key] = complex_to_json(value, digits);
  }
  if (params.a_vector) j["a"] = params_to_json(*params.a_vector, digits);
  if (params.b_vector) j["b"] = params_to_json(*params.b_vector, digits);
  if (!params.f.empty()) {
    j["f"] = params_to_json(params.f, digits);
    j["m"] = Json(params.m.entries());
  }
  if (params.p) j["p"] = *params.p;
  if (params.p_vector) j["p"] = Json(params.p_vector->entries());
  if (params.k) j["k"] = *params.k;
  return j;
}

Json to_json(const HypFunction& fun, int digits) {
  return Json{{"p", fun.p()}, {"q", fun.q()}, {"num", params_to_json(fun.num, digits)},
              {"den", params_to_json(fun.den, digits)}};
}

Json to_json(const HypTerm& term, int digits) {
  Json j{{"coeff", complex_to_json(term.coeff, digits)},
         {"x_power", term.x_power},
         {"prefactor_exponent", complex_to_json(term.prefactor_exponent, digits)},
         {"arg_map", term.arg_map == ArgMap::mobius ? "mobius" : "identity"}};
  j["fun"] = term.fun ? to_json(*term.fun, digits) : Json(nullptr);
  return j;
}

Json to_json(const HypExpression& expr, int digits) {
  Json terms = Json::array();
  for (const auto& t : expr.terms) terms.push_back(to_json(t, digits));
  return terms;
}

Json to_json(const Transformation& t, int digits) {
  return Json{{"lhs", to_json(t.lhs, digits)}, {"terms", to_json(t.rhs, digits)}, {"warnings", t.warnings}};
}

Json to_json(const CPoly& poly, int digits) {
  Json coeffs = Json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(complex_to_json(c, digits));
  return Json{{"degree", poly.is_zero() ? Json(nullptr) : Json(poly.degree())},
              {"zero", poly.is_zero()},
              {"coefficients", coeffs}};
}

Json to_json(const RootSet& roots, int digits) {
  return Json{{"roots", params_to_json(roots.roots, digits)},
              {"residual", format_real(roots.residual, 6)},
              {"near_nonpositive_integer", roots.near_nonpositive_integer}};
}

}  // namespace ipd
