// SPDX-License-Identifier: Apache-2.0
//
// Entanglement witness W = Wbar - eps*I for the ABLS family: kernel-projector
// construction, the closed-form matrix, the product-state objective, the
// multistart minimization of eps, and the white-noise threshold.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "boundlab/qmat.hpp"
#include "boundlab/states.hpp"

namespace boundlab {

// Wbar = P + Q_A^{T_A} + Q_B^{T_B} + Q_C^{T_C} with P the projector onto
// ker(rho) and Q_X the projector onto ker(rho^{T_X}).
ComplexMatrix wbar_generic(const DensityMatrix& rho);
// The same operator assembled from its closed form.
ComplexMatrix wbar_explicit(const ABLSParams& p);
// <e,f,g| Wbar |e,f,g> for the real product state with angles
// (theta_e, theta_f, theta_g); the phases are fixed to zero.
double epsilon_objective(const ABLSParams& p, double theta_e, double theta_f,
                         double theta_g);

struct EpsilonResult {
  double epsilon;
  std::array<double, 3> angles;
};

// Multistart Nelder-Mead over [0, pi)^3: 64 lattice starts, 64 seeded random
// starts, all computational-basis corners and a deterministic probe set.
// Starts run in parallel; the reduction is min by value with lexicographic
// angle tie-break, so results are run-to-run identical. Reported angles are
// canonicalized over the even-sign-flip orbit
// (theta -> pi - theta on two slots), which leaves the objective invariant.
EpsilonResult epsilon_min(const ABLSParams& p);

// Minimum of the objective over `n` seeded random probe angles.
double epsilon_probe_min(const ABLSParams& p, std::size_t n, std::uint64_t seed);

// tr(W rho_bound) with W = wbar_explicit - eps*I; negative for every valid
// parameter set.
double witness_value(const ABLSParams& p);
// tr(W rho) for an arbitrary 3-qubit state (noise sweeps, reconstructions).
double witness_value_on(const ABLSParams& p, const ComplexMatrix& rho);
// p* = 1 - 2*eps: the witness detects p*rho + (1-p)/8*I exactly for p > p*.
double noise_threshold(const ABLSParams& p);

struct PauliTerm {
  std::string label;  // three chars from {i,x,y,z,w,v}; w=(x+y)/sqrt2, v=(x-y)/sqrt2
  double coeff;
};

struct MeasurementSetting {
  std::string setting;  // "zzz", "xxx", "www", "vvv"
  std::vector<PauliTerm> terms;
};

// The 4-setting local decomposition of W. Reassembles to W entrywise.
std::vector<MeasurementSetting> pauli_settings(const ABLSParams& p);
// Alternative form of the corner coherence: xxx/xyy/yxy/yyx strings plus the
// sigma_z diagonal strings.
std::vector<PauliTerm> pauli_string_form(const ABLSParams& p);
// 2x2 observable for a label character.
ComplexMatrix axis_observable(char axis);
ComplexMatrix reassemble(const std::vector<MeasurementSetting>& settings);
ComplexMatrix reassemble(const std::vector<PauliTerm>& terms);

struct WitnessReport {
  ABLSParams params;
  double epsilon;
  std::array<double, 3> minimizer_angles;
  double witness_value;
  double noise_threshold;
  int n_settings;
};

WitnessReport make_witness_report(const ABLSParams& p);

struct SweepRow {
  double a;
  double epsilon;
  std::string branch;  // "corner" or "symmetric"
  std::array<double, 3> angles;
  double p_star;
};

// eps over a = b = 1/c in [from, to] with the given step; rows are computed
// in a worker pool and sorted by a before being returned.
std::vector<SweepRow> epsilon_sweep(double from, double to, double step);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace boundlab
