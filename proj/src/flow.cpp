#include "hof/flow.hpp"

#include <cmath>
#include <stdexcept>

#include "hof/variation.hpp"

namespace hof {

namespace {
constexpr double kPi = 3.14159265358979323846;

Eigen::ArrayXd compute_e_field(const DiscreteCurve& curve, const FlowParams& params) {
  if (params.m == 1) return euler_lagrange_m1(curve);
  const InducedMetric m = induced_metric(curve);
  const double h_fd = params.guards.h_fd_factor * m.total_length / curve.size();
  return discrete_gradient(curve, params.m, h_fd).field;
}

double dt_cap(const DiscreteCurve& curve, const FlowParams& params, double length) {
  const double h = length / curve.size();
  if (params.integrator == Integrator::Explicit)
    return params.guards.cfl * std::pow(h, 2 * params.m + 2);
  return params.guards.dt_max_factor * h * h;
}

}  // namespace

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::Completed: return "completed";
    case Termination::BlowUpDtUnderflow: return "blowup_dt_underflow";
    case Termination::BlowUpCurvature: return "blowup_curvature";
    case Termination::BlowUpChartExit: return "blowup_chart_exit";
  }
  return "?";
}

CirculantSmoother::CirculantSmoother(int n) : n_(n) {
  basis_.resize(n, n);
  mode_number_.resize(n);
  int col = 0;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) basis_(j, col) = inv_sqrt_n;
  mode_number_[col++] = 0.0;
  const double amp = std::sqrt(2.0 / n);
  for (int k = 1; 2 * k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const double th = 2.0 * kPi * k * j / n;
      basis_(j, col) = amp * std::cos(th);
      basis_(j, col + 1) = amp * std::sin(th);
    }
    mode_number_[col] = k;
    mode_number_[col + 1] = k;
    col += 2;
  }
  if (n % 2 == 0) {
    for (int j = 0; j < n; ++j) basis_(j, col) = (j % 2 == 0 ? 1.0 : -1.0) * inv_sqrt_n;
    mode_number_[col++] = n / 2.0;
  }
}

Eigen::ArrayX2d CirculantSmoother::apply_inverse(const Eigen::ArrayX2d& v, double alpha,
                                                 double h, int power) const {
  Eigen::ArrayXd mu(n_);
  for (int c = 0; c < n_; ++c) {
    const double s = 2.0 * std::sin(kPi * mode_number_[c] / n_) / h;
    mu[c] = 1.0 + alpha * std::pow(s * s, power);
  }
  Eigen::MatrixXd coeffs = basis_.transpose() * v.matrix();
  coeffs.array().colwise() /= mu;
  return (basis_ * coeffs).array();
}

FlowState flow_init(const DiscreteCurve& curve, const FlowParams& params) {
  validate_curve(curve);
  FlowState st;
  st.curve = reparametrize(curve);
  validate_curve(st.curve);
  st.t = 0.0;
  st.F_m = energy(st.curve, params.m);
  st.E_field = compute_e_field(st.curve, params);
  const InducedMetric m = induced_metric(st.curve);
  st.dt_last = 0.01 * dt_cap(st.curve, params, m.total_length);
  return st;
}

StepOutcome flow_step(FlowState& state, const FlowParams& params,
                      const CirculantSmoother& smoother) {
  const int n = state.curve.size();
  const InducedMetric metric = induced_metric(state.curve);
  const CurveFrames frames = curve_frames(state.curve, metric);
  const double h = metric.total_length / n;

  Eigen::ArrayX2d velocity(n, 2);  // chart velocity, -E nu / lambda
  for (int i = 0; i < n; ++i) {
    const double s = -state.E_field[i] / frames.lambda[i];
    velocity(i, 0) = s * frames.normal(i, 0);
    velocity(i, 1) = s * frames.normal(i, 1);
  }

  const double cap = dt_cap(state.curve, params, metric.total_length);
  double dt = std::min(state.dt_last > 0.0 ? state.dt_last * 1.2 : cap, cap);
  dt = std::min(dt, params.t_end - state.t);

  StepOutcome out;
  bool chart_exit_seen = false;
  for (int attempt = 0; attempt <= params.guards.max_halvings; ++attempt, dt *= 0.5) {
    out.rejections = attempt;
    Eigen::ArrayX2d displacement;
    if (params.integrator == Integrator::SemiImplicit) {
      // Leading-order stiffness of the normal velocity is
      // 2 (-1)^m d_s^{2m+2}; the conformal factors cancel in the chart, so
      // the damping coefficient is 2 for all three model spaces.
      displacement = dt * smoother.apply_inverse(velocity, 2.0 * dt, h, params.m + 1);
    } else {
      displacement = dt * velocity;
    }

    DiscreteCurve candidate = state.curve;
    candidate.vertices += displacement;

    bool inside = true;
    for (int i = 0; i < n && inside; ++i)
      inside = candidate.space.inside_chart(candidate.vertex(i));
    if (!inside) {
      chart_exit_seen = true;
      continue;
    }

    DiscreteCurve resampled;
    double f_new;
    Eigen::ArrayXd e_new;
    double kmax;
    try {
      resampled = reparametrize(candidate);
      const InducedMetric m2 = induced_metric(resampled);
      const CurvatureJet j2 = curvature_jet(resampled, m2, std::max(0, params.m - 1));
      kmax = j2.k.col(0).abs().maxCoeff();
      f_new = energy(m2, j2, params.m);
    } catch (const std::exception&) {
      continue;  // degenerate candidate; halve and retry
    }

    if (kmax > params.guards.max_kappa) {
      out.accepted = false;
      out.blowup = Termination::BlowUpCurvature;
      out.dt = dt;
      return out;
    }

    const double rel_increase = (f_new - state.F_m) / std::abs(state.F_m);
    if (rel_increase <= params.guards.energy_increase_tol) {
      e_new = compute_e_field(resampled, params);
      state.t += dt;
      state.curve = std::move(resampled);
      state.F_m = f_new;
      state.E_field = std::move(e_new);
      state.dt_last = dt;
      out.accepted = true;
      out.dt = dt;
      out.rel_energy_increase = std::max(0.0, rel_increase);
      return out;
    }
  }

  out.accepted = false;
  out.blowup = chart_exit_seen ? Termination::BlowUpChartExit : Termination::BlowUpDtUnderflow;
  out.dt = dt;
  return out;
}

CurvatureNorms curvature_norms(const DiscreteCurve& curve, int max_k) {
  const InducedMetric metric = induced_metric(curve);
  const CurvatureJet jet = curvature_jet(curve, metric, max_k);
  CurvatureNorms norms;
  norms.l2.resize(max_k + 1);
  norms.linf.resize(max_k + 1);
  for (int k = 0; k <= max_k; ++k) {
    norms.l2[k] = std::sqrt((metric.weights * jet.k.col(k).square()).sum());
    norms.linf[k] = jet.k.col(k).abs().maxCoeff();
  }
  return norms;
}

DiagnosticsRecord make_diagnostics_record(const FlowState& state, const FlowParams& params) {
  DiagnosticsRecord rec;
  const InducedMetric metric = induced_metric(state.curve);
  const int max_k = std::max(params.diag_max_k, std::max(0, params.m - 1));
  const CurvatureJet jet = curvature_jet(state.curve, metric, max_k);
  rec.t = state.t;
  rec.F_m = state.F_m;
  rec.length = metric.total_length;
  rec.max_kappa = jet.k.col(0).abs().maxCoeff();
  rec.normA_L2.resize(params.diag_max_k + 1);
  for (int k = 0; k <= params.diag_max_k; ++k)
    rec.normA_L2[k] = std::sqrt((metric.weights * jet.k.col(k).square()).sum());
  const double p = 2.0 * params.m;
  rec.normA_2m = std::pow((metric.weights * jet.k.col(0).abs().pow(p)).sum(), 1.0 / p);
  rec.ratio = rec.normA_2m / std::pow(rec.F_m, 1.0 / p);
  rec.dt = state.dt_last;
  return rec;
}

FlowRunResult run_flow(const DiscreteCurve& initial, const FlowParams& params) {
  FlowRunResult run;
  FlowState state = flow_init(initial, params);
  run.initial_condition = check_initial_condition(state.curve, params.m);
  const CirculantSmoother smoother(state.curve.size());

  run.records.push_back(make_diagnostics_record(state, params));
  run.snapshots.emplace_back(0, state.curve);

  const double snapshot_stride = std::max(1.0, params.t_end / 8.0);
  double next_snapshot_t = snapshot_stride;

  long step_index = 0;
  while (state.t < params.t_end * (1.0 - 1e-12)) {
    const StepOutcome outcome = flow_step(state, params, smoother);
    run.rejections += outcome.rejections;
    if (!outcome.accepted) {
      run.termination = *outcome.blowup;
      break;
    }
    ++step_index;
    run.max_rel_energy_increase =
        std::max(run.max_rel_energy_increase, outcome.rel_energy_increase);
    if (step_index % params.sample_every == 0 || state.t >= params.t_end * (1.0 - 1e-12))
      run.records.push_back(make_diagnostics_record(state, params));
    if (state.t >= next_snapshot_t || state.t >= params.t_end * (1.0 - 1e-12)) {
      run.snapshots.emplace_back(step_index, state.curve);
      next_snapshot_t += snapshot_stride;
    }
  }
  run.steps = step_index;
  run.final_state = std::move(state);
  return run;
}

GronwallReport gronwall_monitor(const FlowRunResult& run, int k) {
  GronwallReport rep;
  rep.k = k;
  if (run.records.empty()) return rep;
  auto norm_sq = [&](const DiagnosticsRecord& r) {
    const double v = r.normA_L2.at(k);
    return v * v;
  };
  rep.initial_sq = norm_sq(run.records.front());
  double sup = 0.0;
  for (const auto& r : run.records) sup = std::max(sup, norm_sq(r));
  rep.sup_sq = sup;
  rep.exceeded = sup > std::max(rep.initial_sq, 10.0 * rep.initial_sq + 1.0);

  const size_t n = run.records.size();
  const size_t mid_lo = n / 5, mid_hi = n / 2;
  const size_t late_lo = (7 * n) / 10;
  double mid = 0.0, late = 0.0;
  for (size_t i = mid_lo; i < std::max(mid_hi, mid_lo + 1) && i < n; ++i)
    mid = std::max(mid, norm_sq(run.records[i]));
  for (size_t i = late_lo; i < n; ++i) late = std::max(late, norm_sq(run.records[i]));
  rep.trend_ratio = (mid > 0.0) ? late / mid : (late > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
  rep.unbounded_growth = rep.exceeded || run.termination != Termination::Completed;
  return rep;
}

}  // namespace hof
