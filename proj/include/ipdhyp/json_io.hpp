#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "ipdhyp/poly.hpp"
#include "ipdhyp/transforms.hpp"

namespace ipd {

using Json = nlohmann::ordered_json;

/// Accepts "re+imi" strings, plain numbers, or [re, im] pairs of strings/numbers.
Complex complex_from_json(const Json& j);
/// [re, im] as decimal strings at `digits` significant digits (default: P).
Json complex_to_json(const Complex& z, int digits = 0);

ParamVector params_from_json(const Json& j);
IntVector ints_from_json(const Json& j);
Json params_to_json(const ParamVector& v, int digits = 0);

/// Parameter files: an object with any of the scalar keys a, b, c, d, e,
/// alpha, t, the vectors f and m, the integers p and k, and p as a list
/// together with a list b.
struct ParamsFile {
  std::map<std::string, Complex> scalars;
  ParamVector f;
  IntVector m;
  std::optional<int> p;
  std::optional<int> k;
  std::optional<ParamVector> b_vector;
  /// Written (never read) for Nørlund cases, whose top parameters form a list.
  std::optional<ParamVector> a_vector;
  std::optional<IntVector> p_vector;

  const Complex& scalar(const std::string& key) const;
  bool has(const std::string& key) const { return scalars.count(key) != 0; }
  IpdSpec spec() const;
};

ParamsFile params_file_from_json(const Json& j);
ParamsFile load_params_file(const std::string& path);
Json to_json(const ParamsFile& params, int digits = 0);

Json to_json(const HypFunction& fun, int digits = 0);
Json to_json(const HypTerm& term, int digits = 0);
Json to_json(const HypExpression& expr, int digits = 0);
Json to_json(const Transformation& t, int digits = 0);
Json to_json(const CPoly& poly, int digits = 0);
Json to_json(const RootSet& roots, int digits = 0);

}  // namespace ipd
