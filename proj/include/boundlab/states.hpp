// SPDX-License-Identifier: Apache-2.0
//
// Builders for the two three-qubit state families, each constructed both by
// direct matrix assembly and by simulating the generating network on a
// six-qubit register followed by a partial trace over the ancilla.

#pragma once

#include <string>
#include <utility>

#include "boundlab/circuit.hpp"
#include "boundlab/qmat.hpp"

namespace boundlab {

struct ABLSParams {
  double a, b, c;

  ABLSParams(double a_, double b_, double c_);
  double normalization() const;  // N = 2 + a + b + c + 1/a + 1/b + 1/c

  static ABLSParams optimal();  // a = b = 0.3460, c = 1/0.3460
};

struct DCTParams {
  double lambda0_plus, lambda0_minus, lambda01, lambda10, lambda11;

  DCTParams(double l0p, double l0m, double l01, double l10, double l11);
  double gamma() const;  // sqrt(l0+ + l0-)
  double delta() const;  // l0+ - l0-

  static DCTParams eq24();  // l0+ = 1/3, l0- = l10 = 0, l01 = l11 = 1/6
};

// --- ABLS family ---

DensityMatrix abls_direct(const ABLSParams& p);
// (alpha, beta) solved from alpha*N1*N2 = beta*N3*N4 and alpha^2+beta^2 = 1,
// positive roots.
std::pair<double, double> abls_alpha_beta(const ABLSParams& p);
// Amplitudes of the prepared three-qubit pure state, assembled directly.
PureState abls_psi_bound(const ABLSParams& p);
// Preparation stage only (3 qubits): local rotations, the two controlled
// blocks, and the closing CNOT.
Circuit abls_prep_circuit(const ABLSParams& p);
// Full 6-qubit network: preparation, copy CNOTs, ancilla CNOTs, Toffoli.
Circuit abls_network_circuit(const ABLSParams& p);
// Runs the network from |000000> and traces out qubits 3..5.
DensityMatrix abls_network(const ABLSParams& p);
// The 6-qubit pre-trace state.
PureState abls_purification(const ABLSParams& p);

// --- DCT family ---

DensityMatrix dct_direct(const DCTParams& p);
// Schmidt coefficients (alpha_plus, alpha_minus) of the two-qubit target.
std::pair<double, double> dct_schmidt_coefficients(const DCTParams& p);
PureState dct_psi(const DCTParams& p);
Circuit dct_prep_circuit(const DCTParams& p);
Circuit dct_network_circuit(const DCTParams& p);
DensityMatrix dct_network(const DCTParams& p);
PureState dct_purification(const DCTParams& p);

// --- serialization ---

// {"n_qubits": n, "entries": [[re, im], ...]} row-major; doubles printed with
// 17 significant digits so the round-trip is bit exact.
std::string state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const std::string& text);
std::string pretty(const ComplexMatrix& m);

}  // namespace boundlab
