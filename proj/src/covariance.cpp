#include "gex/covariance.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "gex/errors.hpp"
#include "gex/rng.hpp"

namespace gex {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "undecidable";
  }
}

std::string to_string(CovKind k) {
  switch (k) {
    case CovKind::Iid: return "iid";
    case CovKind::Geometric: return "geometric";
    case CovKind::Polynomial: return "polynomial";
    case CovKind::FiniteSupport: return "finite_support";
    default: return "explicit_table";
  }
}

static void check_dim(int d) {
  if (d < 1) throw InvalidArgument("dimension d must be positive");
}

CovarianceModel CovarianceModel::iid(int d) {
  check_dim(d);
  CovarianceModel m;
  m.kind = CovKind::Iid;
  m.d = d;
  return m;
}

CovarianceModel CovarianceModel::geometric(int d, double rho1, double theta) {
  check_dim(d);
  if (!(rho1 >= 0.0) || !(rho1 < 1.0))
    throw InvalidArgument("geometric: rho1 must lie in [0,1)");
  if (!(theta > 0.0) || !(theta < 1.0))
    throw InvalidArgument("geometric: theta must lie in (0,1)");
  CovarianceModel m;
  m.kind = CovKind::Geometric;
  m.d = d;
  m.rho1 = rho1;
  m.theta = theta;
  return m;
}

CovarianceModel CovarianceModel::polynomial(int d, double c, double alpha) {
  check_dim(d);
  if (!(c >= 0.0) || !(c < 1.0))
    throw InvalidArgument("polynomial: c must lie in [0,1)");
  if (!(alpha > 0.0)) throw InvalidArgument("polynomial: alpha must be > 0");
  CovarianceModel m;
  m.kind = CovKind::Polynomial;
  m.d = d;
  m.c = c;
  m.alpha = alpha;
  return m;
}

CovarianceModel CovarianceModel::finite_support(int d,
                                                std::vector<double> rho) {
  check_dim(d);
  for (double r : rho)
    if (!(r >= 0.0) || !std::isfinite(r))
      throw InvalidArgument("finite_support: entries must be finite and >= 0");
  CovarianceModel m;
  m.kind = CovKind::FiniteSupport;
  m.d = d;
  m.table = std::move(rho);
  return m;
}

CovarianceModel CovarianceModel::explicit_table(int d, std::vector<double> rho,
                                                bool tail_berman,
                                                bool tail_summable) {
  check_dim(d);
  for (double r : rho)
    if (!std::isfinite(r))
      throw InvalidArgument("explicit_table: entries must be finite");
  CovarianceModel m;
  m.kind = CovKind::ExplicitTable;
  m.d = d;
  m.table = std::move(rho);
  m.assert_tail_berman = tail_berman;
  m.assert_tail_summable = tail_summable;
  return m;
}

double covariance_at(const CovarianceModel& model, std::int64_t q) {
  if (q < 0) throw InvalidArgument("covariance_at: q must be >= 0");
  if (q == 0) return 1.0;  // A1
  switch (model.kind) {
    case CovKind::Iid:
      return 0.0;
    case CovKind::Geometric:
      return model.rho1 * std::pow(model.theta, static_cast<double>(q - 1));
    case CovKind::Polynomial:
      return model.c * std::pow(1.0 + static_cast<double>(q), -model.alpha);
    case CovKind::FiniteSupport:
    case CovKind::ExplicitTable:
      if (q <= static_cast<std::int64_t>(model.table.size()))
        return model.table[static_cast<size_t>(q - 1)];
      return 0.0;
  }
  return 0.0;
}

std::optional<double> covariance_tail_sup(const CovarianceModel& model,
                                          std::int64_t q0) {
  if (q0 <= 0) return std::nullopt;
  switch (model.kind) {
    case CovKind::Iid:
      return 0.0;
    case CovKind::Geometric:
    case CovKind::Polynomial:
      // strictly decreasing in q for the accepted parameter ranges
      return covariance_at(model, q0);
    case CovKind::FiniteSupport:
    case CovKind::ExplicitTable: {
      double s = 0.0;
      for (std::int64_t q = q0;
           q <= static_cast<std::int64_t>(model.table.size()); ++q)
        s = std::max(s, covariance_at(model, q));
      if (model.kind == CovKind::ExplicitTable &&
          static_cast<std::int64_t>(model.table.size()) >= q0 &&
          !model.assert_tail_berman && !model.assert_tail_summable) {
        // tail behaviour beyond the table is not asserted; sup over the
        // listed range is still exact because values vanish beyond q_max
        // only by convention the user may not intend.
        return std::nullopt;
      }
      return s;
    }
  }
  return std::nullopt;
}

std::uint64_t CovarianceModel::fingerprint() const {
  std::uint64_t h = splitmix64(0x1234567fedcba987ULL ^ (std::uint64_t)kind);
  h = splitmix64(h ^ (std::uint64_t)d);
  auto mix = [&h](double x) {
    std::uint64_t b;
    static_assert(sizeof(b) == sizeof(x));
    std::memcpy(&b, &x, sizeof(b));
    h = splitmix64(h ^ b);
  };
  mix(rho1);
  mix(theta);
  mix(c);
  mix(alpha);
  for (double r : table) mix(r);
  h = splitmix64(h ^ (assert_tail_berman ? 1u : 0u) ^
                 (assert_tail_summable ? 2u : 0u));
  return h;
}

std::string CovarianceModel::to_json() const {
  json j;
  j["kind"] = to_string(kind);
  j["d"] = d;
  json p = json::object();
  switch (kind) {
    case CovKind::Iid:
      break;
    case CovKind::Geometric:
      p["rho1"] = rho1;
      p["theta"] = theta;
      break;
    case CovKind::Polynomial:
      p["c"] = c;
      p["alpha"] = alpha;
      break;
    case CovKind::FiniteSupport:
      p["rho"] = table;
      break;
    case CovKind::ExplicitTable:
      p["rho"] = table;
      p["tail_berman"] = assert_tail_berman;
      p["tail_summable"] = assert_tail_summable;
      break;
  }
  j["params"] = p;
  return j.dump();
}

CovarianceModel CovarianceModel::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("model json: ") + e.what());
  }
  if (!j.contains("kind") || !j.contains("d"))
    throw ConfigError("model json: missing \"kind\" or \"d\"");
  const std::string kind = j["kind"];
  const int d = j["d"];
  const json p = j.value("params", json::object());
  if (kind == "iid") return iid(d);
  if (kind == "geometric")
    return geometric(d, p.at("rho1"), p.at("theta"));
  if (kind == "polynomial") return polynomial(d, p.at("c"), p.at("alpha"));
  if (kind == "finite_support")
    return finite_support(d, p.at("rho").get<std::vector<double>>());
  if (kind == "explicit_table")
    return explicit_table(d, p.at("rho").get<std::vector<double>>(),
                          p.value("tail_berman", false),
                          p.value("tail_summable", false));
  throw ConfigError("model json: unknown kind \"" + kind + "\"");
}

namespace {

Verdict from_bool(bool b) { return b ? Verdict::Holds : Verdict::Fails; }

// sup_{q >= q0} rho_q as a verdict-aware value
struct Sup {
  bool decidable = false;
  double value = 0.0;
};

Sup tail_sup(const CovarianceModel& m, std::int64_t q0) {
  auto s = covariance_tail_sup(m, q0);
  if (!s) return {};
  return {true, *s};
}

}  // namespace

AssumptionReport check_assumptions(const CovarianceModel& model, int k) {
  if (k < 0 || k >= model.d)
    throw InvalidArgument("check_assumptions: k must lie in [0, d)");
  AssumptionReport r;
  r.k = k;
  const double r1 = covariance_at(model, 1);
  const double r2 = covariance_at(model, 2);
  const double r3 = covariance_at(model, 3);

  r.a1 = Verdict::Holds;  // rho_0 = 1 by construction
  r.a2 = from_bool(r1 >= 0.0 && r1 < 1.0);

  const Sup s2 = tail_sup(model, 2);
  const Sup s3 = tail_sup(model, 3);
  const Sup s4 = tail_sup(model, 4);

  if (k == 0) {
    r.a3 = s2.decidable ? from_bool(s2.value >= 0.0 && s2.value <= r1)
                        : Verdict::Undecidable;
  } else {
    r.a3 = s4.decidable
               ? from_bool(s4.value >= 0.0 && s4.value <= r3 && r3 < r2 &&
                           r2 < r1)
               : Verdict::Undecidable;
  }

  r.a4 = (k == 0) ? Verdict::Holds
                  : from_bool(1.0 + (2 * k + 1) * r2 > 2.0 * (k + 1) * r1);

  // Decay-rate conditions, symbolic per kind.
  switch (model.kind) {
    case CovKind::Iid:
    case CovKind::Geometric:
    case CovKind::FiniteSupport:
      r.a5 = Verdict::Holds;
      r.a6 = Verdict::Holds;
      break;
    case CovKind::Polynomial:
      r.a5 = from_bool(model.alpha > 0.0);
      r.a6 = from_bool(model.alpha > static_cast<double>(model.d));
      break;
    case CovKind::ExplicitTable:
      r.a5 = model.assert_tail_berman ? Verdict::Holds : Verdict::Undecidable;
      r.a6 =
          model.assert_tail_summable ? Verdict::Holds : Verdict::Undecidable;
      break;
  }

  // Table-2 weaker implications.
  r.a7 = (k == 0) ? Verdict::Holds : from_bool(r2 >= 0.0 && r2 < 1.0);
  if (k == 0 || k == model.d - 1) {
    r.a8 = Verdict::Holds;
  } else {
    r.a8 = s4.decidable
               ? from_bool(s4.value >= 0.0 && s4.value <= r3 && r3 < r2)
               : Verdict::Undecidable;
  }
  if (k == 0) {
    r.a9 = s2.decidable ? from_bool(s2.value >= 0.0 && s2.value <= r1)
                        : Verdict::Undecidable;
  } else {
    r.a9 = s3.decidable
               ? from_bool(s3.value >= 0.0 && s3.value <= r2 && r2 < r1)
               : Verdict::Undecidable;
  }
  return r;
}

}  // namespace gex
