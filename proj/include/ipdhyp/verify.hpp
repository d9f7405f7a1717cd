#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipdhyp/json_io.hpp"

namespace ipd {

enum class IdentityId {
  MP1,
  MP2,
  THM3_EQ19,
  THM3_EQ20,
  THM4_EQ29,
  THM4_EQ31,
  VEC_EQ27,
  VEC_EQ28,
  THM5_FIRST,
  THM5_SECOND,
  LEMMA1,
  COR1,
  LEMMA2,
  COR2,
  LEMMA3,
  LEMMA4,
  MINTON,
  KARLSSON,
  COR3,
  COR4,
  COR5,
  NORLUND,
  OVERLAP,
};

const std::vector<IdentityId>& all_identities();
std::string to_string(IdentityId id);
/// Throws ParseError for unknown names.
IdentityId parse_identity(std::string_view name);

struct IdentityCase {
  IdentityId id;
  int index = 0;
  ParamsFile params;
  std::vector<Complex> x_samples;
};

/// Seeded, deterministic, precondition-filtered parameter draws.
std::vector<IdentityCase> sample_params(IdentityId id, std::uint64_t seed, int count);

/// Cases per identity when the caller passes count = 0.
int default_count(IdentityId id);
/// 10^-(P - slack) with the identity's slack at the current precision.
Real default_tolerance(IdentityId id);

/// Relative residuals of one case, one per comparison.
std::vector<Real> case_residuals(const IdentityCase& c);

/// Builds the transformation named by a theorem id (MP1, MP2, COR1,
/// THM3_EQ19/20/26, THM4_EQ29/31, VEC_EQ27/28, THM5_FIRST/SECOND) from a
/// parameter file. `route` selects paperQ/newP or paperQhat/newPhat.
Transformation build_theorem(std::string_view theorem, const ParamsFile& params, std::string_view route = {});

/// Builds the characteristic polynomial named by `which` (Q, P, Qhat, Phat, W,
/// T, Tstar, L, Lhat) from a parameter file. `route` selects eq5/eq7 for Q.
CPoly build_polynomial(std::string_view which, const ParamsFile& params, std::string_view route = {});

enum class CaseStatus { pass, fail, skipped };

struct CaseResult {
  IdentityCase input;
  int samples = 0;
  Real max_residual;
  CaseStatus status = CaseStatus::pass;
  std::string reason;
  std::string detail;
};

struct IdentityReport {
  IdentityId id;
  Real tolerance;
  std::vector<CaseResult> cases;
  std::string reason;
  std::string detail;

  int count(CaseStatus status) const;
  Real max_residual() const;
  CaseStatus status() const;
};

struct SuiteOptions {
  std::vector<IdentityId> ids;
  std::uint64_t seed = 20190513;
  int count = 0;
  std::optional<Real> tol;
};

struct VerificationReport {
  SuiteOptions options;
  int digits = 0;
  double wall_time_seconds = 0;
  std::vector<IdentityReport> identities;

  bool all_passed() const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
  Json to_json(bool include_wall_time = true) const;
};

VerificationReport run_suite(const SuiteOptions& options);

}  // namespace ipd
