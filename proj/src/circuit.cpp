// SPDX-License-Identifier: Apache-2.0

#include "boundlab/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace boundlab {

namespace {

constexpr double kUnitaryTol = 1e-10;

inline int bitpos(int n_qubits, int q) { return n_qubits - 1 - q; }

bool is_unitary(const ComplexMatrix& u, double tol) {
  const ComplexMatrix g = multiply(dagger(u), u);
  return max_norm_distance(g, ComplexMatrix::identity(u.dim())) <= tol;
}

}  // namespace

Gate::Gate(std::string name_, ComplexMatrix unitary_, std::vector<int> targets_,
           std::vector<Control> controls_, std::vector<double> control_phases_)
    : name(std::move(name_)),
      unitary(std::move(unitary_)),
      targets(std::move(targets_)),
      controls(std::move(controls_)),
      control_phases(std::move(control_phases_)) {
  if (targets.empty()) throw BadGate("Gate: needs at least one target");
  if (unitary.dim() != (std::size_t{1} << targets.size()))
    throw BadGate("Gate: unitary dim must equal 2^#targets");
  std::set<int> seen;
  for (int t : targets) {
    if (t < 0) throw BadGate("Gate: negative target index");
    if (!seen.insert(t).second) throw BadGate("Gate: duplicate qubit index");
  }
  for (const Control& c : controls) {
    if (c.qubit < 0) throw BadGate("Gate: negative control index");
    if (!seen.insert(c.qubit).second)
      throw BadGate("Gate: targets and controls must be disjoint");
  }
  if (!control_phases.empty() &&
      control_phases.size() != (std::size_t{1} << controls.size()))
    throw BadGate("Gate: control_phases must have 2^#controls entries");
  if (!is_unitary(unitary, kUnitaryTol))
    throw NonUnitaryGate("Gate '" + name + "': block fails unitarity check");
}

void Circuit::add(Gate g) {
  for (int t : g.targets)
    if (t >= n_qubits) throw BadGate("Circuit: target exceeds register size");
  for (const Control& c : g.controls)
    if (c.qubit >= n_qubits) throw BadGate("Circuit: control exceeds register size");
  gates.push_back(std::move(g));
}

PureState apply(const PureState& state, const Gate& gate) {
  const int n = state.n_qubits();
  for (int t : gate.targets)
    if (t >= n) throw BadGate("apply: target exceeds register size");
  for (const Control& c : gate.controls)
    if (c.qubit >= n) throw BadGate("apply: control exceeds register size");

  const std::size_t dim = state.dim();
  const int nt = static_cast<int>(gate.targets.size());
  const std::size_t block = std::size_t{1} << nt;

  std::size_t target_mask = 0;
  std::vector<std::size_t> tbit(nt);
  for (int t = 0; t < nt; ++t) {
    tbit[t] = std::size_t{1} << bitpos(n, gate.targets[t]);
    target_mask |= tbit[t];
  }
  // Block index i places bit t of i (first target most significant) at the
  // t-th target's position.
  std::vector<std::size_t> place(block, 0);
  for (std::size_t i = 0; i < block; ++i)
    for (int t = 0; t < nt; ++t)
      if (i >> (nt - 1 - t) & 1) place[i] |= tbit[t];

  std::size_t cmask = 0, cval = 0;
  const int nc = static_cast<int>(gate.controls.size());
  std::vector<std::size_t> cbit(nc);
  for (int c = 0; c < nc; ++c) {
    cbit[c] = std::size_t{1} << bitpos(n, gate.controls[c].qubit);
    cmask |= cbit[c];
    if (gate.controls[c].on_one) cval |= cbit[c];
  }

  std::vector<cplx> amps = state.amps();
  if (!gate.control_phases.empty()) {
    for (std::size_t idx = 0; idx < dim; ++idx) {
      std::size_t pattern = 0;
      for (int c = 0; c < nc; ++c)
        if (idx & cbit[c]) pattern |= std::size_t{1} << (nc - 1 - c);
      const double th = gate.control_phases[pattern];
      if (th != 0.0) amps[idx] *= cplx(std::cos(th), std::sin(th));
    }
  }

  std::vector<cplx> in(block), out(block);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    if ((base & cmask) != cval) continue;
    for (std::size_t i = 0; i < block; ++i) in[i] = amps[base | place[i]];
    for (std::size_t i = 0; i < block; ++i) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < block; ++j) s += gate.unitary(i, j) * in[j];
      out[i] = s;
    }
    for (std::size_t i = 0; i < block; ++i) amps[base | place[i]] = out[i];
  }
  return PureState(n, std::move(amps));
}

ComplexMatrix expand_gate(const Gate& gate, int n_qubits) {
  for (int t : gate.targets)
    if (t >= n_qubits) throw BadGate("expand_gate: target exceeds register size");
  for (const Control& c : gate.controls)
    if (c.qubit >= n_qubits) throw BadGate("expand_gate: control exceeds register size");

  const int nt = static_cast<int>(gate.targets.size());
  const int nc = static_cast<int>(gate.controls.size());
  const std::size_t block = std::size_t{1} << nt;
  const std::size_t npat = std::size_t{1} << nc;
  const ComplexMatrix i2 = ComplexMatrix::identity(2);

  ComplexMatrix total(std::size_t{1} << n_qubits);
  for (std::size_t pat = 0; pat < npat; ++pat) {
    bool active = true;
    for (int c = 0; c < nc; ++c) {
      const bool bit = pat >> (nc - 1 - c) & 1;
      if (bit != gate.controls[c].on_one) active = false;
    }
    cplx phase = 1.0;
    if (!gate.control_phases.empty()) {
      const double th = gate.control_phases[pat];
      phase = cplx(std::cos(th), std::sin(th));
    }
    // Sum of matrix units of the target block, each placed by a kron chain.
    for (std::size_t bi = 0; bi < block; ++bi)
      for (std::size_t bj = 0; bj < block; ++bj) {
        const cplx coeff = active ? gate.unitary(bi, bj)
                                  : (bi == bj ? cplx(1.0) : cplx(0.0));
        if (coeff == cplx{}) continue;
        ComplexMatrix term(1);
        term(0, 0) = 1.0;
        for (int q = 0; q < n_qubits; ++q) {
          ComplexMatrix f = i2;
          const auto ct = std::find(gate.targets.begin(), gate.targets.end(), q);
          if (ct != gate.targets.end()) {
            const int t = static_cast<int>(ct - gate.targets.begin());
            f = ComplexMatrix(2);
            f(bi >> (nt - 1 - t) & 1, bj >> (nt - 1 - t) & 1) = 1.0;
          } else {
            for (int c = 0; c < nc; ++c)
              if (gate.controls[c].qubit == q) {
                const std::size_t bit = pat >> (nc - 1 - c) & 1;
                f = ComplexMatrix(2);
                f(bit, bit) = 1.0;
              }
          }
          term = detail::kron_serial(term, f);
        }
        term *= phase * coeff;
        total += term;
      }
  }
  return total;
}

PureState apply_reference(const PureState& state, const Gate& gate) {
  const ComplexMatrix op = expand_gate(gate, state.n_qubits());
  std::vector<cplx> out(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < state.dim(); ++j) s += op(i, j) * state.amps()[j];
    out[i] = s;
  }
  return PureState(state.n_qubits(), std::move(out));
}

PureState run(const Circuit& circuit, const PureState& initial) {
  if (initial.n_qubits() != circuit.n_qubits)
    throw DimMismatch("run: state size does not match circuit register");
  PureState st = initial;
  for (const Gate& g : circuit.gates) st = apply(st, g);
  return st;
}

Gate single_qubit(std::string name, const ComplexMatrix& u2, int target) {
  return Gate(std::move(name), u2, {target});
}

Gate controlled_single_qubit(std::string name, const ComplexMatrix& u2, int control,
                             bool on_one, int target) {
  return Gate(std::move(name), u2, {target}, {{control, on_one}});
}

namespace {

ComplexMatrix pauli_x_2x2() {
  ComplexMatrix x(2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

}  // namespace

Gate cnot(int control, int target) {
  return Gate("CNOT", pauli_x_2x2(), {target}, {{control, true}});
}

Gate hadamard(int target) {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2);
  m(0, 0) = h;
  m(0, 1) = h;
  m(1, 0) = h;
  m(1, 1) = -h;
  return Gate("H", m, {target});
}

Gate pauli_x_gate(int target) { return Gate("X", pauli_x_2x2(), {target}); }

Gate toffoli3(const std::array<int, 3>& controls, int target) {
  std::set<int> distinct(controls.begin(), controls.end());
  distinct.insert(target);
  if (distinct.size() != 4) throw BadIndex("toffoli3: needs 4 distinct qubits");
  return Gate("TOFF3", pauli_x_2x2(), {target},
              {{controls[0], true}, {controls[1], true}, {controls[2], true}});
}

std::string to_text(const Circuit& circuit) {
  std::string out;
  char buf[64];
  for (const Gate& g : circuit.gates) {
    out += g.name;
    out += " targets=[";
    for (std::size_t i = 0; i < g.targets.size(); ++i) {
      if (i) out += ',';
      std::snprintf(buf, sizeof buf, "%d", g.targets[i]);
      out += buf;
    }
    out += "] controls=[";
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      if (i) out += ',';
      std::snprintf(buf, sizeof buf, "(%d,%c)", g.controls[i].qubit,
                    g.controls[i].on_one ? '+' : '-');
      out += buf;
    }
    out += ']';
    // Permutation gates are implied by their name; dump other blocks.
    if (g.name != "CNOT" && g.name != "TOFF3" && g.name != "X") {
      out += " matrix=[";
      for (std::size_t i = 0; i < g.unitary.dim(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < g.unitary.dim(); ++j) {
          if (j) out += ',';
          std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", g.unitary(i, j).real(),
                        g.unitary(i, j).imag());
          out += buf;
        }
      }
      out += ']';
    }
    out += '\n';
  }
  return out;
}

}  // namespace boundlab
