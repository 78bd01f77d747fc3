// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra for operators on up to 9 qubits (dim <= 512).
// Qubit ordering convention used across the whole library: qubit 0 is the
// leftmost ket label, i.e. the most significant bit of a computational-basis
// index. |k1 k2 k3> has index (k1<<2)|(k2<<1)|k3.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "boundlab/errors.hpp"

namespace boundlab {

using cplx = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(0) {}
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  const std::vector<cplx>& entries() const { return a_; }
  std::vector<cplx>& entries() { return a_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  // Throws Error if any entry is NaN/Inf.
  void check_finite(const char* where) const;

 private:
  std::size_t dim_;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

// Serial reference kernels, kept callable for tests and benchmarks.
namespace detail {
ComplexMatrix multiply_serial(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix multiply_parallel(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_serial(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_parallel(const ComplexMatrix& a, const ComplexMatrix& b);
}  // namespace detail

// Dispatch to the OpenMP kernel above this dimension.
inline constexpr std::size_t kParallelDimThreshold = 128;

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& m);
cplx trace(const ComplexMatrix& m);
// tr(a b) without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);
double max_norm(const ComplexMatrix& m);
double max_norm_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  std::optional<ComplexMatrix> eigenvectors;  // columns, aligned with eigenvalues
};

// Cyclic Jacobi rotations on the Hermitian input. Converges when the
// off-diagonal Frobenius norm drops below 1e-13 (at most 100 sweeps).
Spectrum eig_hermitian(const ComplexMatrix& m, bool want_vectors = true);

class PureState {
 public:
  PureState(int n_qubits, std::vector<cplx> amps);
  static PureState basis(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amps() const { return amps_; }
  std::vector<cplx>& amps() { return amps_; }
  double norm() const;

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

class DensityMatrix {
 public:
  // Validates Hermiticity (1e-12), unit trace (1e-12) and positivity
  // (min eigenvalue >= -1e-10).
  DensityMatrix(int n_qubits, ComplexMatrix mat);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return mat_.dim(); }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  int n_qubits_;
  ComplexMatrix mat_;
};

// Reduced state on `keep` (ascending qubit indices; order preserved).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);
// rho_keep[i,j] = sum_rest psi[i,rest] conj(psi[j,rest]); avoids forming the
// 2^n x 2^n projector.
DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep);
// Transposition of one qubit's indices. Output may be non-positive.
ComplexMatrix partial_transpose(const DensityMatrix& rho, int cut);
ComplexMatrix partial_transpose(const ComplexMatrix& m, int n_qubits, int cut);

ComplexMatrix outer(const PureState& psi);

}  // namespace boundlab
