#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gex {

enum class CovKind { Iid, Geometric, Polynomial, FiniteSupport, ExplicitTable };

enum class Verdict { Holds, Fails, Undecidable };

std::string to_string(Verdict v);
std::string to_string(CovKind k);

// Stationary ||.||_1-isotropic law: Cov[X_t, X_t'] = rho_{||t - t'||_1},
// rho_0 = 1 by construction.
struct CovarianceModel {
  CovKind kind = CovKind::Iid;
  int d = 1;

  // geometric: rho_q = rho1 * theta^(q-1) for q >= 1
  double rho1 = 0.0;
  double theta = 0.0;
  // polynomial: rho_q = c * (1+q)^(-alpha) for q >= 1
  double c = 0.0;
  double alpha = 0.0;
  // finite-support / explicit-table: rho_1..rho_Q
  std::vector<double> table;
  // explicit-table only: user-asserted tail behaviour beyond q_max
  bool assert_tail_berman = false;     // rho_q log q -> 0
  bool assert_tail_summable = false;   // sum q^{d-1} rho_q < inf

  static CovarianceModel iid(int d);
  static CovarianceModel geometric(int d, double rho1, double theta);
  static CovarianceModel polynomial(int d, double c, double alpha);
  static CovarianceModel finite_support(int d, std::vector<double> rho);
  static CovarianceModel explicit_table(int d, std::vector<double> rho,
                                        bool tail_berman = false,
                                        bool tail_summable = false);

  std::uint64_t fingerprint() const;
  std::string to_json() const;
  static CovarianceModel from_json(const std::string& text);
};

// rho_q for q >= 0; rho_0 = 1 always.
double covariance_at(const CovarianceModel& model, std::int64_t q);

// sup_{q >= q0} rho_q, where decidable from the model kind (symbolic for the
// parametric kinds, exact for tables).
std::optional<double> covariance_tail_sup(const CovarianceModel& model,
                                          std::int64_t q0);

// Verdicts for Table-1 assumptions A1..A6 and the weaker implications
// A7..A9 at a given k.
struct AssumptionReport {
  int k = 0;
  Verdict a1 = Verdict::Undecidable;  // rho_0 = 1
  Verdict a2 = Verdict::Undecidable;  // 0 <= rho_1 < rho_0
  Verdict a3 = Verdict::Undecidable;  // boundedness chain (k-dependent)
  Verdict a4 = Verdict::Undecidable;  // 1 + (2k+1) rho_2 > 2(k+1) rho_1
  Verdict a5 = Verdict::Undecidable;  // rho_q log q -> 0
  Verdict a6 = Verdict::Undecidable;  // sum q^{d-1} rho_q < inf
  Verdict a7 = Verdict::Undecidable;  // 0 <= rho_2 < rho_0 (k >= 1)
  Verdict a8 = Verdict::Undecidable;  // sup_{q>=4} <= rho_3 < rho_2 (1<=k<d-1)
  Verdict a9 = Verdict::Undecidable;  // sup chain ending < rho_1

  bool core_hold() const {  // A1..A4, what the deterministic results use
    return a1 == Verdict::Holds && a2 == Verdict::Holds &&
           a3 == Verdict::Holds && a4 == Verdict::Holds;
  }
};

AssumptionReport check_assumptions(const CovarianceModel& model, int k);

}  // namespace gex
