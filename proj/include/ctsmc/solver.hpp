#ifndef CTSMC_SOLVER_HPP
#define CTSMC_SOLVER_HPP

#include <vector>

#include "ctsmc/grid.hpp"
#include "ctsmc/model.hpp"
#include "ctsmc/observation.hpp"

namespace ctsmc {

enum class InitialCondition { TransitionAtStart, SteadyState };
enum class TerminalCondition { Uninformed, TransitionAtEnd };

struct BoundaryCondition {
  InitialCondition initial = InitialCondition::TransitionAtStart;
  TerminalCondition terminal = TerminalCondition::Uninformed;
};

struct SolverConfig {
  double h = 1e-3;
  BoundaryCondition boundary{};
  // History entries with survival(t - tau) * max current below this are
  // dropped from the memory integrals.
  double history_truncation_tol = 1e-14;
  // Moment lookup tables (grid spacing h/2); exact closed forms when off.
  bool use_moment_tables = true;
};

enum class BoundarySide { Initial, Terminal };
enum class BoundaryKind { P, Current };

// Inhomogeneity vectors implementing the boundary conditions.  For the
// initial side, t is absolute time; for the terminal side, t is the
// remaining time to the horizon (the functions only depend on T - t).
std::vector<double> boundary_inhomogeneity(const BoundaryCondition &bc, const CTSMCModel &model,
                                           double t, BoundarySide side, BoundaryKind kind);

struct ForwardResult {
  GridPtr grid;
  GridFunction alpha;      // filtered marginals (post-update at observation nodes)
  GridFunction phi_alpha;  // input currents
  GridFunction psi_alpha;  // output currents
  std::vector<double> normalizers;  // c_k per observation
  double log_evidence = 0.0;
  // Deepest memory window actually integrated, per state.
  std::vector<double> truncation_horizon;
};

struct BackwardResult {
  GridPtr grid;
  GridFunction beta;
  GridFunction phi_beta;  // entry-conditioned future likelihood
  GridFunction psi_beta;  // exit-conditioned future likelihood
  std::vector<double> truncation_horizon;
};

ForwardResult forward_pass(const CTSMCModel &model, const ObservationSet &obs, double horizon,
                           const SolverConfig &cfg);
ForwardResult forward_pass(const CTSMCModel &model, const ObservationSet &obs, double horizon,
                           const BoundaryCondition &bc, double h);

BackwardResult backward_pass(const CTSMCModel &model, const ObservationSet &obs, double horizon,
                             const std::vector<double> &normalizers, const SolverConfig &cfg);
BackwardResult backward_pass(const CTSMCModel &model, const ObservationSet &obs, double horizon,
                             const std::vector<double> &normalizers, const BoundaryCondition &bc,
                             double h);

// Scaled likelihood carrying the forward normalizers, ready for the
// backward/smoothing/Viterbi stages.
ScaledLikelihood scaled_likelihood(const ObservationSet &obs, const ForwardResult &fwd);

}  // namespace ctsmc

#endif
