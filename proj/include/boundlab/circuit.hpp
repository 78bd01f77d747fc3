// SPDX-License-Identifier: Apache-2.0
//
// Gate-level simulator for up to 6 qubits. The fast path applies gates by
// bit-masked index iteration; apply_reference() expands every gate to its
// full 2^n x 2^n matrix through projector sums and is kept as the serial
// reference implementation for cross-validation.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "boundlab/qmat.hpp"

namespace boundlab {

struct Control {
  int qubit;
  bool on_one;  // false = open circle: acts when the control is |0>
};

struct Gate {
  std::string name;
  ComplexMatrix unitary;          // dim 2^targets.size()
  std::vector<int> targets;       // ordered
  std::vector<Control> controls;
  // Optional diagonal phase per control-bit pattern (size 2^controls.size()).
  // Pattern bit order follows the controls list, first control most
  // significant. Empty means no extra phases.
  std::vector<double> control_phases;

  Gate(std::string name, ComplexMatrix unitary, std::vector<int> targets,
       std::vector<Control> controls = {}, std::vector<double> control_phases = {});
};

struct Circuit {
  int n_qubits;
  std::vector<Gate> gates;

  explicit Circuit(int n_qubits_) : n_qubits(n_qubits_) {}
  void add(Gate g);
};

PureState apply(const PureState& state, const Gate& gate);
PureState apply_reference(const PureState& state, const Gate& gate);
// Full-dimension expansion of a gate: sum over control patterns of
// kron factors (projectors on controls, U or I on targets, I elsewhere).
ComplexMatrix expand_gate(const Gate& gate, int n_qubits);
PureState run(const Circuit& circuit, const PureState& initial);

// Common gate constructors.
Gate single_qubit(std::string name, const ComplexMatrix& u2, int target);
Gate controlled_single_qubit(std::string name, const ComplexMatrix& u2, int control,
                             bool on_one, int target);
Gate cnot(int control, int target);
Gate hadamard(int target);
Gate pauli_x_gate(int target);
// Flips `target` iff all three controls are |1>.
Gate toffoli3(const std::array<int, 3>& controls, int target);

// Line-oriented dump, one gate per line:
//   NAME targets=[..] controls=[(q,+|-)..] matrix=[(re,im),..;..]
std::string to_text(const Circuit& circuit);

}  // namespace boundlab
