#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "hof/curve.hpp"
#include "hof/frenet.hpp"

namespace hof {

enum class Integrator { SemiImplicit, Explicit };

struct FlowGuards {
  double max_kappa = 1e6;
  double cfl = 0.02;             // explicit cap: dt <= cfl * (L/N)^{2m+2}
  double dt_max_factor = 0.25;   // semi-implicit cap: dt <= factor * (L/N)^2
  int max_halvings = 40;
  double energy_increase_tol = 1e-10;  // relative quadrature-noise allowance
  double h_fd_factor = 1e-5;           // discrete-gradient step (m >= 2)
};

struct FlowParams {
  int m = 1;
  double t_end = 1.0;
  int sample_every = 10;
  int diag_max_k = 3;  // record ||nabla^k A|| for k <= diag_max_k
  Integrator integrator = Integrator::SemiImplicit;
  FlowGuards guards;
};

struct FlowState {
  double t = 0.0;
  DiscreteCurve curve;
  double F_m = 0.0;
  Eigen::ArrayXd E_field;
  double dt_last = 0.0;
};

enum class Termination {
  Completed,
  BlowUpDtUnderflow,
  BlowUpCurvature,
  BlowUpChartExit,
};

const char* termination_name(Termination t);

struct DiagnosticsRecord {
  double t = 0.0;
  double F_m = 0.0;
  double length = 0.0;
  double max_kappa = 0.0;
  std::vector<double> normA_L2;  // k = 0..K
  double normA_2m = 0.0;
  double ratio = 0.0;  // ||A||_{2m} / F_m^{1/(2m)}
  double dt = 0.0;
};

struct StepOutcome {
  bool accepted = false;
  std::optional<Termination> blowup;
  double dt = 0.0;
  int rejections = 0;
  double rel_energy_increase = 0.0;  // of the accepted step
};

// Solves (I + alpha * P) y = v componentwise on a uniform periodic grid,
// where P = (-Delta_2)^power is the positive stencil power of the second
// difference.  Diagonalized once per N in the real Fourier basis.
class CirculantSmoother {
 public:
  explicit CirculantSmoother(int n);
  Eigen::ArrayX2d apply_inverse(const Eigen::ArrayX2d& v, double alpha, double h,
                                int power) const;

 private:
  int n_;
  Eigen::MatrixXd basis_;       // orthogonal
  Eigen::ArrayXd mode_number_;  // frequency k per basis column
};

FlowState flow_init(const DiscreteCurve& curve, const FlowParams& params);

// One adaptive step: grows dt by 1.2x up to the integrator cap, halves on
// energy increase; never mutates state unless the step is accepted.
StepOutcome flow_step(FlowState& state, const FlowParams& params,
                      const CirculantSmoother& smoother);

struct FlowRunResult {
  std::vector<DiagnosticsRecord> records;
  std::vector<std::pair<int, DiscreteCurve>> snapshots;  // (step index, curve)
  FlowState final_state;
  Termination termination = Termination::Completed;
  long steps = 0;
  long rejections = 0;
  double max_rel_energy_increase = 0.0;
  InitialConditionReport initial_condition;
};

FlowRunResult run_flow(const DiscreteCurve& initial, const FlowParams& params);

struct CurvatureNorms {
  Eigen::ArrayXd l2;    // ||nabla^k A||_{L^2}, k = 0..K
  Eigen::ArrayXd linf;  // ||nabla^k A||_{L^inf}
};

CurvatureNorms curvature_norms(const DiscreteCurve& curve, int max_k);

struct GronwallReport {
  int k = 0;
  double initial_sq = 0.0;
  double sup_sq = 0.0;
  bool exceeded = false;  // sup > max(initial, 10*initial + 1)
  double trend_ratio = 0.0;  // late-window max over mid-window max
  bool unbounded_growth = false;
};

GronwallReport gronwall_monitor(const FlowRunResult& run, int k);

DiagnosticsRecord make_diagnostics_record(const FlowState& state, const FlowParams& params);

}  // namespace hof
