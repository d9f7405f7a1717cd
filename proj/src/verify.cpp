#include "ipdhyp/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>

namespace ipd {

namespace {

struct IdentityName {
  IdentityId id;
  const char* name;
};

constexpr std::array<IdentityName, 23> kNames{{
    {IdentityId::MP1, "MP1"},
    {IdentityId::MP2, "MP2"},
    {IdentityId::THM3_EQ19, "THM3_EQ19"},
    {IdentityId::THM3_EQ20, "THM3_EQ20"},
    {IdentityId::THM4_EQ29, "THM4_EQ29"},
    {IdentityId::THM4_EQ31, "THM4_EQ31"},
    {IdentityId::VEC_EQ27, "VEC_EQ27"},
    {IdentityId::VEC_EQ28, "VEC_EQ28"},
    {IdentityId::THM5_FIRST, "THM5_FIRST"},
    {IdentityId::THM5_SECOND, "THM5_SECOND"},
    {IdentityId::LEMMA1, "LEMMA1"},
    {IdentityId::COR1, "COR1"},
    {IdentityId::LEMMA2, "LEMMA2"},
    {IdentityId::COR2, "COR2"},
    {IdentityId::LEMMA3, "LEMMA3"},
    {IdentityId::LEMMA4, "LEMMA4"},
    {IdentityId::MINTON, "MINTON"},
    {IdentityId::KARLSSON, "KARLSSON"},
    {IdentityId::COR3, "COR3"},
    {IdentityId::COR4, "COR4"},
    {IdentityId::COR5, "COR5"},
    {IdentityId::NORLUND, "NORLUND"},
    {IdentityId::OVERLAP, "OVERLAP"},
}};

constexpr int kMaxAttempts = 10000;
constexpr int kLemma3MaxM = 6;
constexpr int kNorlundMaxN = 8;

Real margin() { return pow10(-3); }

bool pole_free(const Complex& z) { return distance_to_nonpositive_integers(z) >= margin(); }

bool pole_free(const ParamVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& z) { return pole_free(z); });
}

bool away_from_zero(const Complex& z) { return abs(z) >= margin(); }

bool poch_ok(const Complex& z, int n) {
  for (int j = 0; j < n; ++j) {
    if (!away_from_zero(z + j)) return false;
  }
  return true;
}

Real distance_to_integer(const Complex& z) {
  const Real re = z.re - boost::multiprecision::round(z.re);
  return sqrt(re * re + z.im * z.im);
}

bool non_integer(const Complex& z) { return distance_to_integer(z) >= margin(); }

Real relative(const Complex& value, const Complex& reference) {
  return abs(value - reference) / std::max(Real(1), abs(reference));
}

std::uint64_t mix_seed(std::uint64_t seed, IdentityId id) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(id) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Draws on a 10^-6 decimal grid from the raw mt19937_64 stream, so the case
// list does not depend on the standard library's distribution algorithms.
class Sampler {
 public:
  Sampler(std::uint64_t seed, IdentityId id) : rng_(mix_seed(seed, id)) {}

  int integer(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  long long micro(long long lo, long long hi) {
    return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  static Real from_micro(long long v) { return Real(v) / Real(1000000); }

  Real grid(long long lo, long long hi) { return from_micro(micro(lo, hi)); }

  Complex box() {
    Real re = grid(-2000000, 3000000);
    Real im = grid(-1000000, 1000000);
    return Complex(re, im);
  }

  ParamVector box_vector(std::size_t n) {
    ParamVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(box());
    return v;
  }

  IntVector m_vector() {
    static const std::array<std::vector<int>, 6> options{
        {{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 1, 1}}};
    return IntVector(options[static_cast<std::size_t>(integer(0, 5))]);
  }

  std::vector<Complex> disk_samples() {
    constexpr long long radius = 450000;
    std::vector<Complex> xs{Complex(0)};
    while (xs.size() < 9) {
      const long long re = micro(-radius, radius);
      const long long im = micro(-radius, radius);
      if (re * re + im * im > radius * radius || (re == 0 && im == 0)) continue;
      xs.emplace_back(from_micro(re), from_micro(im));
    }
    return xs;
  }

 private:
  std::mt19937_64 rng_;
};

bool is_transform_identity(IdentityId id) {
  switch (id) {
    case IdentityId::MP1:
    case IdentityId::MP2:
    case IdentityId::THM3_EQ19:
    case IdentityId::THM3_EQ20:
    case IdentityId::THM4_EQ29:
    case IdentityId::THM4_EQ31:
    case IdentityId::VEC_EQ27:
    case IdentityId::VEC_EQ28:
    case IdentityId::THM5_FIRST:
    case IdentityId::THM5_SECOND:
    case IdentityId::COR1:
      return true;
    default:
      return false;
  }
}

std::vector<Transformation> case_transforms(const IdentityCase& c) {
  const std::string name = to_string(c.id);
  if (c.id == IdentityId::MP1) {
    return {build_theorem(name, c.params, "paperQ"), build_theorem(name, c.params, "newP")};
  }
  if (c.id == IdentityId::MP2) {
    return {build_theorem(name, c.params, "paperQhat"), build_theorem(name, c.params, "newPhat")};
  }
  if (c.id == IdentityId::OVERLAP) {
    return {build_theorem("MP1", c.params, "newP"), build_theorem("THM4_EQ29", c.params)};
  }
  return {build_theorem(name, c.params)};
}

bool transform_ok(const Transformation& t) {
  if (!t.warnings.empty() || !pole_free(t.lhs.den)) return false;
  for (const auto& term : t.rhs.terms) {
    if (term.fun && !pole_free(term.fun->den)) return false;
  }
  return true;
}

bool transforms_ok(const IdentityCase& c) {
  try {
    const auto ts = case_transforms(c);
    return std::all_of(ts.begin(), ts.end(), transform_ok);
  } catch (const Error&) {
    return false;
  }
}

const std::vector<IntVector>& lemma4_m_vectors() {
  static const std::vector<IntVector> list{{1},    {2},    {3},       {4},       {5},      {1, 1},
                                           {2, 1}, {2, 2}, {3, 2},    {1, 1, 1}, {2, 2, 1}, {1, 3, 1}};
  return list;
}

bool norlund_closed_ok(const ParamVector& a, const ParamVector& b) {
  if (b.size() == 3) {
    const Complex nu = b[0] + b[1] + b[2] - a[0] - a[1];
    return poch_ok(nu - b[1], kNorlundMaxN) && poch_ok(nu - b[2], kNorlundMaxN);
  }
  if (b.size() == 4) {
    const Complex nu4 = b[0] + b[1] + b[2] + b[3] - a[0] - a[1] - a[2];
    const Complex nu2 = b[0] + b[1] - a[0];
    return poch_ok(nu4 - b[2], kNorlundMaxN) && poch_ok(nu4 - b[3], kNorlundMaxN) &&
           poch_ok(nu2 - a[1], kNorlundMaxN) && poch_ok(nu2 - a[2], kNorlundMaxN);
  }
  return true;
}

// One attempt at a case; false means "reject and redraw".
bool draw_case(IdentityCase& c, Sampler& s) {
  ParamsFile& pf = c.params;
  pf = ParamsFile{};
  c.x_samples.clear();
  auto& sc = pf.scalars;

  switch (c.id) {
    case IdentityId::MP1:
    case IdentityId::MP2:
    case IdentityId::COR1:
    case IdentityId::LEMMA2:
    case IdentityId::COR2: {
      const Complex a = s.box();
      const Complex b = s.box();
      const Complex cc = s.box();
      pf.m = s.m_vector();
      pf.f = s.box_vector(pf.m.size());
      if (c.id != IdentityId::LEMMA2) sc["a"] = a;
      sc["b"] = b;
      sc["c"] = cc;
      const int total = pf.m.total();
      if (!pole_free(cc) || !pole_free(pf.f)) return false;
      if (c.id != IdentityId::COR1 && !poch_ok(cc - b - total, total)) return false;
      if ((c.id == IdentityId::MP2 || c.id == IdentityId::COR2) && !poch_ok(cc - a - total, total)) return false;
      if (c.id == IdentityId::MP2 && !poch_ok(1 + a + b - cc, total)) return false;
      if (c.id == IdentityId::LEMMA2 || c.id == IdentityId::COR2) return true;
      c.x_samples = s.disk_samples();
      return transforms_ok(c);
    }
    case IdentityId::THM3_EQ19:
    case IdentityId::THM3_EQ20: {
      const Complex a = s.box();
      const Complex b = s.box();
      pf.m = s.m_vector();
      pf.f = s.box_vector(pf.m.size());
      sc["a"] = a;
      sc["b"] = b;
      if (!pole_free(b) || !pole_free(b + 1) || !pole_free(pf.f)) return false;
      c.x_samples = s.disk_samples();
      return transforms_ok(c);
    }
    case IdentityId::THM4_EQ29:
    case IdentityId::THM4_EQ31:
    case IdentityId::OVERLAP: {
      const Complex a = s.box();
      const Complex b = s.box();
      pf.m = s.m_vector();
      pf.f = s.box_vector(pf.m.size());
      const int total = pf.m.total();
      const int p = c.id == IdentityId::OVERLAP ? total + 1 + s.integer(0, 3 - total) : 1 + c.index % 4;
      sc["a"] = a;
      sc["b"] = b;
      pf.p = p;
      if (!pole_free(b) || !pole_free(b + p) || !pole_free(pf.f)) return false;
      if (c.id == IdentityId::THM4_EQ31) {
        for (int q = 1; q <= p; ++q) {
          if (!pole_free(b + q - a)) return false;
        }
      }
      c.x_samples = s.disk_samples();
      return transforms_ok(c);
    }
    case IdentityId::VEC_EQ27:
    case IdentityId::VEC_EQ28: {
      static const std::array<std::vector<int>, 4> shapes{{{1, 1}, {2, 1}, {1, 2}, {2, 2}}};
      const Complex a = s.box();
      pf.b_vector = s.box_vector(2);
      pf.p_vector = IntVector(shapes[static_cast<std::size_t>(s.integer(0, 3))]);
      pf.m = s.m_vector();
      pf.f = s.box_vector(pf.m.size());
      sc["a"] = a;
      sc["b"] = (*pf.b_vector)[0];
      ParamVector beta;
      for (std::size_t j = 0; j < 2; ++j) {
        for (int i = 0; i < (*pf.p_vector)[j]; ++i) beta.push_back((*pf.b_vector)[j] + i);
      }
      for (std::size_t u = 0; u < beta.size(); ++u) {
        if (!pole_free(beta[u]) || !pole_free(beta[u] + 1)) return false;
        for (std::size_t v = u + 1; v < beta.size(); ++v) {
          if (!away_from_zero(beta[u] - beta[v])) return false;
        }
      }
      if (!pole_free(pf.f) || !pole_free(pf.b_vector->plus(*pf.p_vector))) return false;
      c.x_samples = s.disk_samples();
      return transforms_ok(c);
    }
    case IdentityId::THM5_FIRST:
    case IdentityId::THM5_SECOND: {
      const Complex a = s.box();
      const Complex d = s.box();
      const Complex e = s.box();
      const Complex b = s.box();
      pf.m = s.m_vector();
      pf.f = s.box_vector(pf.m.size());
      sc["a"] = a;
      sc["b"] = b;
      sc["d"] = d;
      sc["e"] = e;
      const int total = pf.m.total();
      if (!away_from_zero(b) || !pole_free(e) || !pole_free(b + 1) || !pole_free(pf.f)) return false;
      if (!poch_ok(e - d - total + 1, total - 1)) return false;
      if (c.id == IdentityId::THM5_SECOND &&
          (!poch_ok(e - a - total + 1, total - 1) || !poch_ok(1 + a + d - e, total - 1))) {
        return false;
      }
      c.x_samples = s.disk_samples();
      return transforms_ok(c);
    }
    case IdentityId::LEMMA1: {
      const Real t = s.grid(50000, 950000);
      const Complex b = s.box();
      const Complex cc = s.box();
      pf.m = s.m_vector();
      pf.f = s.box_vector(pf.m.size());
      sc["t"] = Complex(t);
      sc["b"] = b;
      sc["c"] = cc;
      for (std::size_t i = 0; i < pf.f.size(); ++i) {
        if (!pole_free(1 - pf.f[i] - pf.m[i] + b) || !non_integer(pf.f[i] - cc)) return false;
        for (std::size_t j = i + 1; j < pf.f.size(); ++j) {
          if (!non_integer(pf.f[i] - pf.f[j])) return false;
        }
      }
      return true;
    }
    case IdentityId::LEMMA3: {
      const Complex alpha = s.box();
      sc["alpha"] = alpha;
      for (int n = 1; n <= kLemma3MaxM; ++n) {
        if (!away_from_zero(alpha - n)) return false;
      }
      return true;
    }
    case IdentityId::LEMMA4: {
      const Complex b = s.box();
      pf.f = s.box_vector(3);
      sc["b"] = b;
      if (!pole_free(pf.f)) return false;
      return poch_ok(b + 1, 5);
    }
    case IdentityId::MINTON: {
      const Complex b = s.box();
      pf.m = s.m_vector();
      pf.f = s.box_vector(pf.m.size());
      const int k = pf.m.total() + s.integer(0, 4);
      sc["b"] = b;
      pf.k = k;
      c.x_samples = {Complex(1)};
      return poch_ok(b + 1, k) && pole_free(pf.f);
    }
    case IdentityId::KARLSSON: {
      const Complex a = s.box();
      const Complex b = s.box();
      pf.m = s.m_vector();
      pf.f = s.box_vector(pf.m.size());
      sc["a"] = a;
      sc["b"] = b;
      c.x_samples = {Complex(1)};
      if (pf.m.total() > 2 || (1 - a - pf.m.total()).re < Real("0.05")) return false;
      return pole_free(b + 1) && pole_free(pf.f);
    }
    case IdentityId::COR3: {
      const Complex a = s.box();
      const Complex b = s.box();
      pf.m = s.m_vector();
      pf.f = s.box_vector(pf.m.size());
      sc["a"] = a;
      sc["b"] = b;
      pf.p = 2;
      if (!pole_free(b) || !pole_free(b + 1 - a) || !pole_free(b + 2 - a)) return false;
      Complex upper(1);
      Complex lower(1);
      for (std::size_t i = 0; i < pf.f.size(); ++i) {
        upper *= pf.f[i] - b - 1 + pf.m[i];
        lower *= pf.f[i] - b - 1;
      }
      return away_from_zero((b - a + 1) * upper - b * lower);
    }
    case IdentityId::COR4:
    case IdentityId::COR5: {
      const Complex a = s.box();
      const Complex b = s.box();
      const Complex d = s.box();
      const Complex e = s.box();
      sc["a"] = a;
      sc["b"] = b;
      sc["d"] = d;
      sc["e"] = e;
      Complex shift;
      if (c.id == IdentityId::COR4) {
        pf.m = IntVector{2};
        pf.f = s.box_vector(1);
        shift = 2 * pf.f[0] - b + 1;
      } else {
        pf.m = IntVector{1, 1};
        pf.f = s.box_vector(2);
        shift = pf.f[0] + pf.f[1] - b;
      }
      return away_from_zero(b) && away_from_zero(e - d - 1) && away_from_zero(e - a - 1) &&
             away_from_zero(shift - d) && away_from_zero(a * d + shift * (e - a - d - 1)) &&
             pole_free(pf.f);
    }
    case IdentityId::NORLUND: {
      const int p = 2 + c.index % 3;
      pf.a_vector = s.box_vector(static_cast<std::size_t>(p - 1));
      pf.b_vector = s.box_vector(static_cast<std::size_t>(p));
      sc["alpha"] = s.box();
      return norlund_closed_ok(*pf.a_vector, *pf.b_vector);
    }
  }
  return false;
}

std::vector<Real> polynomial_deviation(const CPoly& lhs, const CPoly& rhs) {
  const int n = std::max(lhs.degree(), rhs.degree());
  Real scale(0);
  for (int i = 0; i <= n; ++i) scale = std::max({scale, abs(lhs.coeff(i)), abs(rhs.coeff(i))});
  std::vector<Real> out;
  for (int i = 0; i <= n; ++i) {
    out.push_back(scale > 0 ? abs(lhs.coeff(i) - rhs.coeff(i)) / scale : Real(0));
  }
  return out;
}

ParamVector permuted(const ParamVector& v, std::size_t rotate_by, bool reverse) {
  std::vector<Complex> e(v.begin(), v.end());
  if (reverse) std::reverse(e.begin(), e.end());
  std::rotate(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(rotate_by % e.size()), e.end());
  return ParamVector(std::move(e));
}

HypFunction summation_function(const IdentityCase& c) {
  const Complex& b = c.params.scalar("b");
  HypFunction fun;
  if (c.id == IdentityId::MINTON) fun.num.push_back(Complex(-*c.params.k));
  if (c.id == IdentityId::KARLSSON) fun.num.push_back(c.params.scalar("a"));
  fun.num.push_back(b);
  fun.num.append(c.params.f.plus(c.params.m));
  fun.den.push_back(b + 1);
  fun.den.append(c.params.f);
  return fun;
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> out;
    for (const auto& n : kNames) out.push_back(n.id);
    return out;
  }();
  return ids;
}

std::string to_string(IdentityId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "UNKNOWN";
}

IdentityId parse_identity(std::string_view name) {
  for (const auto& n : kNames) {
    if (name == n.name) return n.id;
  }
  throw Error(ErrorKind::ParseError, "unknown identity '" + std::string(name) + "'");
}

int default_count(IdentityId id) {
  return id == IdentityId::LEMMA2 || id == IdentityId::COR2 ? 50 : 20;
}

Real default_tolerance(IdentityId id) {
  switch (id) {
    case IdentityId::COR3:
    case IdentityId::COR4:
    case IdentityId::COR5:
      return Precision::tolerance(15);
    case IdentityId::OVERLAP:
      return Precision::tolerance(14);
    case IdentityId::NORLUND:
      return Precision::tolerance(10);
    default:
      return Precision::tolerance(12);
  }
}

std::vector<IdentityCase> sample_params(IdentityId id, std::uint64_t seed, int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "count must be at least 1");
  Sampler sampler(seed, id);
  std::vector<IdentityCase> cases;
  for (int index = 0; index < count; ++index) {
    IdentityCase c{id, index, {}, {}};
    int attempts = 0;
    while (!draw_case(c, sampler)) {
      if (++attempts >= kMaxAttempts) {
        throw Error(ErrorKind::RejectionExhausted,
                    to_string(id) + " case " + std::to_string(index) + ": no admissible parameters after " +
                        std::to_string(kMaxAttempts) + " draws");
      }
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

Transformation build_theorem(std::string_view theorem, const ParamsFile& params, std::string_view route) {
  auto require_route = [&](std::initializer_list<std::string_view> allowed) {
    if (route.empty()) return;
    for (auto r : allowed) {
      if (r == route) return;
    }
    throw Error(ErrorKind::InvalidArgument,
                "route '" + std::string(route) + "' does not apply to " + std::string(theorem));
  };
  if (theorem == "MP1") {
    require_route({"paperQ", "newP"});
    return apply_mp1(params.spec(), route == "paperQ" ? Mp1Route::paperQ : Mp1Route::newP);
  }
  if (theorem == "MP2") {
    require_route({"paperQhat", "newPhat"});
    IpdSpec spec = params.spec();
    spec.require_a();
    return apply_mp2(spec, route == "paperQhat" ? Mp2Route::paperQhat : Mp2Route::newPhat);
  }
  require_route({});
  if (theorem == "COR1") {
    IpdSpec spec = params.spec();
    spec.require_a();
    return expand_to_gauss(spec);
  }
  const Complex& a = params.scalar("a");
  if (theorem == "THM3_EQ19" || theorem == "THM3_EQ20" || theorem == "THM3_EQ26") {
    const SingleVariant v = theorem == "THM3_EQ19"   ? SingleVariant::eq19
                            : theorem == "THM3_EQ20" ? SingleVariant::eq20
                                                     : SingleVariant::eq26;
    return apply_degenerate_single(a, params.scalar("b"), params.f, params.m, v);
  }
  if (theorem == "THM4_EQ29" || theorem == "THM4_EQ31") {
    if (!params.p) throw Error(ErrorKind::ParseError, "parameter 'p' is missing");
    return apply_degenerate_p(a, params.scalar("b"), *params.p, params.f, params.m,
                              theorem == "THM4_EQ29" ? DegenerateVariant::eq29 : DegenerateVariant::eq31);
  }
  if (theorem == "VEC_EQ27" || theorem == "VEC_EQ28") {
    if (!params.b_vector || !params.p_vector) {
      throw Error(ErrorKind::ParseError, "vector transformations need lists b and p");
    }
    return apply_degenerate_vector(a, *params.b_vector, *params.p_vector, params.f, params.m,
                                   theorem == "VEC_EQ27" ? VectorVariant::eq27 : VectorVariant::eq28);
  }
  if (theorem == "THM5_FIRST" || theorem == "THM5_SECOND") {
    return apply_two_free(a, params.scalar("d"), params.scalar("e"), params.scalar("b"), params.f, params.m,
                          theorem == "THM5_FIRST" ? TwoFreeVariant::first : TwoFreeVariant::second);
  }
  throw Error(ErrorKind::ParseError, "unknown theorem '" + std::string(theorem) + "'");
}

std::vector<Real> case_residuals(const IdentityCase& c) {
  const ParamsFile& pf = c.params;
  std::vector<Real> out;
  if (is_transform_identity(c.id)) {
    for (const auto& t : case_transforms(c)) {
      for (const auto& x : c.x_samples) out.push_back(t.residual(x));
    }
    return out;
  }
  switch (c.id) {
    case IdentityId::OVERLAP: {
      const auto ts = case_transforms(c);
      for (const auto& x : c.x_samples) {
        const Complex lhs = eval_pfq(ts[0].lhs, x).value;
        out.push_back(abs(ts[0].rhs.evaluate(x) - ts[1].rhs.evaluate(x)) / std::max(Real(1), abs(lhs)));
      }
      return out;
    }
    case IdentityId::LEMMA1: {
      const Real t = pf.scalar("t").re;
      const Complex& b = pf.scalar("b");
      const Complex& cc = pf.scalar("c");
      const Complex closed = meijer_norlund_ipd(t, b, cc, pf.f, pf.m, MeijerRoute::closed);
      const Complex series = meijer_norlund_ipd(t, b, cc, pf.f, pf.m, MeijerRoute::series);
      return {relative(series, closed)};
    }
    case IdentityId::LEMMA2: {
      const Complex& b = pf.scalar("b");
      const Complex& cc = pf.scalar("c");
      const Complex fm = pochhammer_vec(pf.f, pf.m);
      return polynomial_deviation(build_P(b, cc, pf.f, pf.m), build_Q(b, cc, pf.f, pf.m) * fm);
    }
    case IdentityId::COR2: {
      const Complex& a = pf.scalar("a");
      const Complex& b = pf.scalar("b");
      const Complex& cc = pf.scalar("c");
      return polynomial_deviation(build_Qhat(a, b, cc, pf.f, pf.m), build_Phat(a, b, cc, pf.f, pf.m));
    }
    case IdentityId::LEMMA3: {
      const Complex& alpha = pf.scalar("alpha");
      for (int m = 0; m <= kLemma3MaxM; ++m) {
        for (int k = 0; k <= m; ++k) {
          for (int i = 0; i <= k; ++i) {
            out.push_back(relative(closed_form::lemma3_sum(i, k, m, alpha),
                                   closed_form::lemma3_closed(i, k, m, alpha)));
          }
        }
      }
      return out;
    }
    case IdentityId::LEMMA4: {
      const Complex& b = pf.scalar("b");
      for (const auto& m : lemma4_m_vectors()) {
        const ParamVector f(std::vector<Complex>(pf.f.begin(), pf.f.begin() + static_cast<std::ptrdiff_t>(m.size())));
        for (int k = 0; k <= m.total(); ++k) {
          out.push_back(relative(closed_form::lemma4_sum(k, b, f, m), closed_form::lemma4_closed(k, b, f, m)));
        }
      }
      return out;
    }
    case IdentityId::MINTON: {
      const Complex oracle = eval_pfq(summation_function(c), Complex(1)).value;
      return {relative(oracle, closed_form::minton(*pf.k, pf.scalar("b"), pf.f, pf.m))};
    }
    case IdentityId::KARLSSON: {
      const Complex oracle = eval_pfq(summation_function(c), Complex(1)).value;
      return {relative(oracle, closed_form::karlsson(pf.scalar("a"), pf.scalar("b"), pf.f, pf.m))};
    }
    case IdentityId::COR3: {
      const Complex& a = pf.scalar("a");
      const Complex& b = pf.scalar("b");
      const RootSet roots = find_roots(build_T(b, 2, pf.f, pf.m, TVariant::Tstar, a));
      if (roots.roots.size() != 1) throw Error(ErrorKind::DegenerateCase, "T* is not linear");
      return {relative(-roots.roots[0], closed_form::cor3_lambda_star(a, b, pf.f, pf.m))};
    }
    case IdentityId::COR4:
    case IdentityId::COR5: {
      const Complex& a = pf.scalar("a");
      const Complex& b = pf.scalar("b");
      const Complex& d = pf.scalar("d");
      const Complex& e = pf.scalar("e");
      const RootSet l = find_roots(build_L(a, d, e, b, pf.f, pf.m, LVariant::L));
      const RootSet lhat = find_roots(build_L(a, d, e, b, pf.f, pf.m, LVariant::Lhat));
      if (l.roots.size() != 1 || lhat.roots.size() != 1) {
        throw Error(ErrorKind::DegenerateCase, "L or L-hat is not linear");
      }
      Complex lambda;
      Complex lambda_star;
      if (c.id == IdentityId::COR4) {
        lambda = closed_form::cor4_lambda(b, d, e, pf.f[0]);
        lambda_star = closed_form::cor4_lambda_star(a, b, d, e, pf.f[0]);
      } else {
        lambda = closed_form::cor5_lambda(b, d, e, pf.f[0], pf.f[1]);
        lambda_star = closed_form::cor5_lambda_star(a, b, d, e, pf.f[0], pf.f[1]);
      }
      return {relative(l.roots[0], lambda), relative(lhat.roots[0], lambda_star)};
    }
    case IdentityId::NORLUND: {
      const NorlundArgs args{*pf.a_vector, *pf.b_vector};
      const Complex& alpha = pf.scalar("alpha");
      const NorlundArgs shifted{pf.a_vector->shifted(alpha), pf.b_vector->shifted(alpha)};
      const NorlundArgs reversed{*pf.a_vector, permuted(*pf.b_vector, 0, true)};
      const NorlundArgs rotated{*pf.a_vector, permuted(*pf.b_vector, 1, false)};
      for (int n = 0; n <= kNorlundMaxN; ++n) {
        const Complex ref = norlund_g(n, args, NorlundRoute::recurrence);
        out.push_back(relative(norlund_g(n, args, NorlundRoute::explicit_sum), ref));
        out.push_back(relative(norlund_g(n, args, NorlundRoute::closed_form), ref));
        out.push_back(relative(norlund_g(n, shifted), ref));
        out.push_back(relative(norlund_g(n, reversed), ref));
        out.push_back(relative(norlund_g(n, rotated), ref));
      }
      return out;
    }
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "no evaluator for " + to_string(c.id));
}

int IdentityReport::count(CaseStatus s) const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [s](const CaseResult& r) { return r.status == s; }));
}

Real IdentityReport::max_residual() const {
  Real worst(0);
  for (const auto& r : cases) {
    if (r.status != CaseStatus::skipped) worst = std::max(worst, r.max_residual);
  }
  return worst;
}

CaseStatus IdentityReport::status() const {
  if (count(CaseStatus::fail) > 0) return CaseStatus::fail;
  if (!reason.empty() || count(CaseStatus::skipped) > 0) return CaseStatus::skipped;
  return CaseStatus::pass;
}

bool VerificationReport::all_passed() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityReport& r) { return r.status() == CaseStatus::pass; });
}

int VerificationReport::exit_code() const {
  for (const auto& r : identities) {
    if (r.status() == CaseStatus::fail) return 1;
  }
  return 0;
}

namespace {

const char* status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

std::string residual_string(const Real& r) { return format_real(r, 6); }

}  // namespace

Json VerificationReport::to_json(bool include_wall_time) const {
  Json j;
  j["seed"] = options.seed;
  j["digits"] = digits;
  j["count"] = options.count;
  j["tolerance_override"] = options.tol ? Json(residual_string(*options.tol)) : Json(nullptr);
  Json ids = Json::array();
  int total = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  for (const auto& r : identities) {
    Json cases = Json::array();
    for (const auto& c : r.cases) {
      Json cj{{"index", c.input.index},
              {"params", ipd::to_json(c.input.params)},
              {"x_samples", params_to_json(ParamVector(c.input.x_samples))},
              {"samples", c.samples},
              {"max_residual", c.status == CaseStatus::skipped ? Json(nullptr) : Json(residual_string(c.max_residual))},
              {"status", status_name(c.status)}};
      if (c.status == CaseStatus::skipped) {
        cj["reason"] = c.reason;
        cj["detail"] = c.detail;
      }
      cases.push_back(std::move(cj));
    }
    Json rj{{"id", ipd::to_string(r.id)},
            {"tolerance", residual_string(r.tolerance)},
            {"status", status_name(r.status())},
            {"cases_total", r.cases.size()},
            {"passed", r.count(CaseStatus::pass)},
            {"failed", r.count(CaseStatus::fail)},
            {"skipped", r.count(CaseStatus::skipped)},
            {"max_residual", residual_string(r.max_residual())}};
    if (!r.reason.empty()) {
      rj["reason"] = r.reason;
      rj["detail"] = r.detail;
    }
    rj["cases"] = std::move(cases);
    ids.push_back(std::move(rj));
    total += static_cast<int>(r.cases.size());
    passed += r.count(CaseStatus::pass);
    failed += r.count(CaseStatus::fail);
    skipped += r.count(CaseStatus::skipped);
  }
  j["identities"] = std::move(ids);
  j["summary"] = Json{{"identities", identities.size()},
                      {"cases", total},
                      {"passed", passed},
                      {"failed", failed},
                      {"skipped", skipped},
                      {"status", exit_code() == 0 ? (all_passed() ? "pass" : "skipped") : "fail"}};
  if (include_wall_time) j["wall_time_seconds"] = wall_time_seconds;
  return j;
}

VerificationReport run_suite(const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.options = options;
  report.digits = Precision::digits();
  for (IdentityId id : options.ids) {
    IdentityReport rep{id, options.tol ? *options.tol : default_tolerance(id), {}, {}, {}};
    std::vector<IdentityCase> cases;
    try {
      cases = sample_params(id, options.seed, options.count > 0 ? options.count : default_count(id));
    } catch (const Error& e) {
      rep.reason = std::string(to_string(e.kind()));
      rep.detail = e.what();
    }
    for (auto& c : cases) {
      CaseResult r;
      r.input = std::move(c);
      try {
        const auto residuals = case_residuals(r.input);
        r.samples = static_cast<int>(residuals.size());
        r.max_residual = Real(0);
        bool ok = true;
        for (const auto& x : residuals) {
          if (!(x <= rep.tolerance)) ok = false;
          if (!(x <= r.max_residual)) r.max_residual = x;
        }
        r.status = ok ? CaseStatus::pass : CaseStatus::fail;
      } catch (const Error& e) {
        r.status = CaseStatus::skipped;
        r.reason = std::string(to_string(e.kind()));
        r.detail = e.what();
      }
      rep.cases.push_back(std::move(r));
    }
    report.identities.push_back(std::move(rep));
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CPoly build_polynomial(std::string_view w, const ParamsFile& pf, std::string_view route) {
  CPoly poly;
  if (w == "Q") {
    if (!route.empty() && route != "eq5" && route != "eq7") {
      throw Error(ErrorKind::InvalidArgument, "Q routes are eq5 and eq7");
    }
    const IpdSpec s = pf.spec();
    poly = build_Q(s.b, s.c, s.f, s.m, route == "eq7" ? QRoute::eq7 : QRoute::eq5);
  } else if (w == "P") {
    const IpdSpec s = pf.spec();
    poly = build_P(s.b, s.c, s.f, s.m);
  } else if (w == "Qhat" || w == "Phat") {
    const IpdSpec s = pf.spec();
    poly = w == "Qhat" ? build_Qhat(s.require_a(), s.b, s.c, s.f, s.m) : build_Phat(s.require_a(), s.b, s.c, s.f, s.m);
  } else if (w == "W") {
    poly = w_poly(pf.scalar("b"), pf.f, pf.m);
  } else if (w == "T" || w == "Tstar") {
    if (!pf.p) throw Error(ErrorKind::ParseError, "parameter 'p' is missing");
    poly = w == "T" ? build_T(pf.scalar("b"), *pf.p, pf.f, pf.m, TVariant::T)
                    : build_T(pf.scalar("b"), *pf.p, pf.f, pf.m, TVariant::Tstar, pf.scalar("a"));
  } else if (w == "L" || w == "Lhat") {
    const Complex a0 = pf.has("a") ? pf.scalar("a") : Complex(0);
    if (w == "Lhat") pf.scalar("a");
    poly = build_L(a0, pf.scalar("d"), pf.scalar("e"), pf.scalar("b"), pf.f, pf.m,
                   w == "L" ? LVariant::L : LVariant::Lhat);
  } else {
    throw Error(ErrorKind::ParseError, "unknown polynomial '" + std::string(w) + "'");
  }
  return poly;
}

}  // namespace ipd
