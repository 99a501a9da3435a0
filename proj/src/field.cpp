#include "gex/field.hpp"

#include <unsupported/Eigen/FFT>

#include <complex>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "gex/errors.hpp"
#include "gex/rng.hpp"

namespace gex {

namespace {

int torus_side(int window_side) {
  int L = 1;
  while (L < 2 * window_side) L *= 2;
  return L;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Covariance of the wrapped field on the torus [0,L)^d under the minimal
// wrap metric; equals the Z^d covariance for all in-window pairs because
// L >= 2 * window side.
std::vector<double> torus_covariance(const CovarianceModel& model, int L) {
  const int d = model.d;
  const std::int64_t total = ipow(L, d);
  std::vector<double> c(static_cast<size_t>(total));
  std::vector<int> x(d, 0);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t rem = idx;
    int q = 0;
    for (int i = d - 1; i >= 0; --i) {
      const int xi = static_cast<int>(rem % L);
      rem /= L;
      q += std::min(xi, L - xi);
    }
    c[static_cast<size_t>(idx)] = covariance_at(model, q);
  }
  return c;
}

// In-place d-dimensional FFT by axis passes.
void fftnd(std::vector<std::complex<double>>& a, int d, int L, bool inverse) {
  Eigen::FFT<double> fft;
  const std::int64_t total = static_cast<std::int64_t>(a.size());
  std::vector<std::complex<double>> line(static_cast<size_t>(L));
  std::vector<std::complex<double>> out(static_cast<size_t>(L));
  for (int axis = d - 1; axis >= 0; --axis) {
    const std::int64_t stride = ipow(L, d - 1 - axis);
    const std::int64_t block = stride * L;
    for (std::int64_t base = 0; base < total; base += block) {
      for (std::int64_t off = 0; off < stride; ++off) {
        for (int j = 0; j < L; ++j) line[j] = a[base + off + j * stride];
        if (inverse)
          fft.inv(out, line);
        else
          fft.fwd(out, line);
        for (int j = 0; j < L; ++j) a[base + off + j * stride] = out[j];
      }
    }
  }
}

struct DensePlan {
  Eigen::MatrixXd factor;  // lower-triangular (or eigen sqrt) so F F^T = M
  double min_eig = 0.0;
};

struct CirculantPlan {
  int L = 0;
  std::vector<double> sqrt_spectrum;
  double min_spec = 0.0;
};

struct Plan {
  bool dense = false;
  DensePlan dense_plan;
  CirculantPlan circ_plan;
};

using PlanKey = std::tuple<std::uint64_t, int, int, std::int64_t>;
std::mutex g_plan_mutex;
std::map<PlanKey, std::shared_ptr<const Plan>> g_plans;

DensePlan make_dense_plan(const CovarianceModel& model, const Window& w,
                          double tol) {
  Eigen::MatrixXd M = window_covariance_matrix(model, w);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  const double max_eig = es.eigenvalues().maxCoeff();
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol * std::max(max_eig, 1.0))
    throw NotPositiveSemidefinite(
        "window covariance has eigenvalue " + std::to_string(min_eig) +
        " (max " + std::to_string(max_eig) + ")");
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  DensePlan p;
  p.factor = es.eigenvectors() * lam.asDiagonal();
  p.min_eig = min_eig;
  return p;
}

CirculantPlan make_circulant_plan(const CovarianceModel& model,
                                  int window_side, double tol) {
  const int d = model.d;
  const int L = torus_side(window_side);
  std::vector<double> c = torus_covariance(model, L);
  std::vector<std::complex<double>> a(c.begin(), c.end());
  fftnd(a, d, L, /*inverse=*/false);
  CirculantPlan p;
  p.L = L;
  p.sqrt_spectrum.resize(a.size());
  double maxs = 0.0, mins = 0.0;
  for (const auto& z : a) {
    maxs = std::max(maxs, z.real());
    mins = std::min(mins, z.real());
  }
  if (mins < -tol * std::max(maxs, 1.0))
    throw EmbeddingFailed("circulant spectrum has entry " +
                          std::to_string(mins) + " below tolerance");
  for (size_t i = 0; i < a.size(); ++i)
    p.sqrt_spectrum[i] = std::sqrt(std::max(a[i].real(), 0.0));
  p.min_spec = mins;
  return p;
}

std::shared_ptr<const Plan> get_plan(const CovarianceModel& model, int n,
                                     const SamplerOptions& opts) {
  const Window w{model.d, n + opts.margin};
  PlanKey key{model.fingerprint(), model.d, w.radius, opts.dense_limit};
  {
    std::lock_guard<std::mutex> lk(g_plan_mutex);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;
  }
  auto plan = std::make_shared<Plan>();
  if (w.size() <= opts.dense_limit) {
    plan->dense = true;
    plan->dense_plan = make_dense_plan(model, w, opts.psd_tol);
  } else {
    plan->dense = false;
    plan->circ_plan = make_circulant_plan(model, w.side(), opts.psd_tol);
  }
  std::lock_guard<std::mutex> lk(g_plan_mutex);
  auto [it, inserted] = g_plans.emplace(key, plan);
  return it->second;
}

}  // namespace

Eigen::MatrixXd window_covariance_matrix(const CovarianceModel& model,
                                         const Window& w) {
  const auto pts = window_points(w);
  const auto N = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd M(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = covariance_at(model, l1_dist(pts[i], pts[j]));
      M(i, j) = v;
      M(j, i) = v;
    }
  return M;
}

CovarianceDiagnostic validate_window_covariance(const CovarianceModel& model,
                                                int n,
                                                const SamplerOptions& opts) {
  if (n < 0) throw InvalidArgument("window radius must be >= 0");
  const Window w{model.d, n + opts.margin};
  CovarianceDiagnostic diag;
  if (model.kind == CovKind::Iid) {
    diag.ok = true;
    diag.min_eigenvalue_estimate = 1.0;
    diag.path = "dense";
    return diag;
  }
  if (w.size() <= opts.dense_limit) {
    DensePlan p = make_dense_plan(model, w, opts.psd_tol);
    diag.ok = true;
    diag.min_eigenvalue_estimate = p.min_eig;
    diag.path = "dense";
  } else {
    CirculantPlan p = make_circulant_plan(model, w.side(), opts.psd_tol);
    diag.ok = true;
    diag.min_eigenvalue_estimate = p.min_spec;
    diag.path = "circulant";
  }
  return diag;
}

FieldSample sample_field(const CovarianceModel& model, int n,
                         std::uint64_t seed, const SamplerOptions& opts) {
  if (n < 0) throw InvalidArgument("window radius must be >= 0");
  if (opts.margin < 1) throw InvalidArgument("margin must be >= 1");
  FieldSample s;
  s.d = model.d;
  s.n = n;
  s.margin = opts.margin;
  s.seed = seed;
  s.model_fingerprint = model.fingerprint();
  const Window w = s.box();
  const std::int64_t N = w.size();
  s.values.resize(N);

  CounterRng rng(seed);
  if (model.kind == CovKind::Iid) {
    for (std::int64_t i = 0; i < N; ++i) s.values[i] = rng.next_normal();
    return s;
  }

  auto plan = get_plan(model, n, opts);
  if (plan->dense) {
    Eigen::VectorXd z(N);
    for (std::int64_t i = 0; i < N; ++i) z[i] = rng.next_normal();
    s.values = plan->dense_plan.factor * z;
    return s;
  }

  const int L = plan->circ_plan.L;
  const std::int64_t total = ipow(L, model.d);
  std::vector<std::complex<double>> z(static_cast<size_t>(total));
  for (std::int64_t i = 0; i < total; ++i) {
    const double re = rng.next_normal();
    const double im = rng.next_normal();
    z[static_cast<size_t>(i)] =
        plan->circ_plan.sqrt_spectrum[static_cast<size_t>(i)] *
        std::complex<double>(re, im);
  }
  fftnd(z, model.d, L, /*inverse=*/true);
  const double scale = std::sqrt(static_cast<double>(total));
  // window point (x_1..x_d), x_i in [-radius, radius], maps to torus
  // coordinate x_i mod L
  for (std::int64_t i = 0; i < N; ++i) {
    Point p = w.point(i);
    std::int64_t t = 0;
    for (int c = 0; c < model.d; ++c) {
      int x = p[c] % L;
      if (x < 0) x += L;
      t = t * L + x;
    }
    s.values[i] = scale * z[static_cast<size_t>(t)].real();
  }
  return s;
}

std::vector<Point> excursion_vertices(const FieldSample& sample, double u) {
  const Window inner{sample.d, sample.n};
  const Window outer = sample.box();
  std::vector<Point> verts;
  for (std::int64_t i = 0; i < inner.size(); ++i) {
    Point p = inner.point(i);
    if (sample.values[outer.index(p)] >= u) verts.push_back(std::move(p));
  }
  return verts;  // lexicographic because window enumeration is row-major
}

std::string FieldSample::to_csv() const {
  std::ostringstream os;
  for (int i = 0; i < d; ++i) os << "t_" << (i + 1) << ",";
  os << "value\n";
  const Window w = box();
  char buf[64];
  for (std::int64_t i = 0; i < w.size(); ++i) {
    Point p = w.point(i);
    for (int c = 0; c < d; ++c) os << p[c] << ",";
    std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
    os << buf << "\n";
  }
  return os.str();
}

}  // namespace gex
