// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "boundlab/qmat.hpp"

namespace boundlab {

ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
// index 0..3 -> I, X, Y, Z
ComplexMatrix pauli(int idx);
// Three-fold Kronecker product of single-qubit operators.
ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);

}  // namespace boundlab
