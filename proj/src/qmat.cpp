// SPDX-License-Identifier: Apache-2.0

#include "boundlab/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace boundlab {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), a_(std::move(entries)) {
  if (a_.size() != dim * dim)
    throw DimMismatch("ComplexMatrix: entries length must equal dim^2");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw DimMismatch("matrix add: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw DimMismatch("matrix sub: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : a_) z *= s;
  return *this;
}

void ComplexMatrix::check_finite(const char* where) const {
  for (const auto& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(std::string(where) + ": non-finite entry");
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

namespace detail {

ComplexMatrix multiply_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatch("multiply: dimension mismatch");
  const std::size_t d = a.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix multiply_parallel(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatch("multiply: dimension mismatch");
  const std::size_t d = a.dim();
  ComplexMatrix out(d);
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < static_cast<long long>(d); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < d; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ja = 0; ja < da; ++ja) {
      const cplx v = a(ia, ja);
      if (v == cplx{}) continue;
      for (std::size_t ib = 0; ib < db; ++ib)
        for (std::size_t jb = 0; jb < db; ++jb)
          out(ia * db + ib, ja * db + jb) = v * b(ib, jb);
    }
  return out;
}

ComplexMatrix kron_parallel(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < static_cast<long long>(da * db); ++r) {
    const std::size_t ia = static_cast<std::size_t>(r) / db;
    const std::size_t ib = static_cast<std::size_t>(r) % db;
    for (std::size_t ja = 0; ja < da; ++ja) {
      const cplx v = a(ia, ja);
      if (v == cplx{}) continue;
      for (std::size_t jb = 0; jb < db; ++jb)
        out(static_cast<std::size_t>(r), ja * db + jb) = v * b(ib, jb);
    }
  }
  return out;
}

}  // namespace detail

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.dim() >= kParallelDimThreshold ? detail::multiply_parallel(a, b)
                                          : detail::multiply_serial(a, b);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.dim() * b.dim() >= kParallelDimThreshold ? detail::kron_parallel(a, b)
                                                    : detail::kron_serial(a, b);
}

ComplexMatrix dagger(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

cplx trace(const ComplexMatrix& m) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatch("trace_product: dimension mismatch");
  const std::size_t d = a.dim();
  cplx t = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t += a(i, j) * b(j, i);
  return t;
}

double max_norm(const ComplexMatrix& m) {
  double mx = 0.0;
  for (const auto& z : m.entries()) mx = std::max(mx, std::abs(z));
  return mx;
}

double max_norm_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatch("max_norm_distance: dimension mismatch");
  double mx = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    mx = std::max(mx, std::abs(a.entries()[i] - b.entries()[i]));
  return mx;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double mx = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      mx = std::max(mx, std::abs(m(i, j) - std::conj(m(j, i))));
  return mx;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return hermiticity_defect(m) <= tol;
}

namespace {

double offdiag_frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

Spectrum eig_hermitian(const ComplexMatrix& m, bool want_vectors) {
  if (hermiticity_defect(m) > 1e-10)
    throw NotHermitian("eig_hermitian: input fails Hermiticity check");
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  // Symmetrize exactly so rounding in the input cannot drift the iteration.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = cplx(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double tol = 1e-13;
  for (int sweep = 0; sweep < 100 && offdiag_frobenius(a) > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= tol / (10.0 * n)) continue;
        // Phase factor reducing the pivot to a real symmetric 2x2 problem.
        const cplx phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Unitary pair rotation: col p' = c*col_p - s*conj(phase)*col_q,
        //                        col q' = s*phase*col_p + c*col_q.
        const cplx sp = s * phase;
        const cplx spc = s * std::conj(phase);
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - spc * aiq;
          a(i, q) = sp * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - sp * aqj;
          a(q, j) = spc * apj + c * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
        if (want_vectors) {
          for (std::size_t i = 0; i < n; ++i) {
            const cplx vip = v(i, p), viq = v(i, q);
            v(i, p) = c * vip - spc * viq;
            v(i, q) = sp * vip + c * viq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  Spectrum spec;
  spec.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) spec.eigenvalues[i] = a(order[i], order[i]).real();
  if (want_vectors) {
    ComplexMatrix vs(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) vs(i, j) = v(i, order[j]);
    spec.eigenvectors = std::move(vs);
  }
  return spec;
}

PureState::PureState(int n_qubits, std::vector<cplx> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
  if (n_qubits_ <= 0) throw BadParams("PureState: n_qubits must be positive");
  if (amps_.size() != (std::size_t{1} << n_qubits_))
    throw DimMismatch("PureState: amplitude count must be 2^n");
  if (std::abs(norm() - 1.0) > 1e-12)
    throw BadParams("PureState: state is not normalized");
}

PureState PureState::basis(int n_qubits, std::size_t index) {
  std::vector<cplx> amps(std::size_t{1} << n_qubits);
  amps.at(index) = 1.0;
  return PureState(n_qubits, std::move(amps));
}

double PureState::norm() const {
  double s = 0.0;
  for (const auto& z : amps_) s += std::norm(z);
  return std::sqrt(s);
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix mat)
    : n_qubits_(n_qubits), mat_(std::move(mat)) {
  if (n_qubits_ <= 0) throw BadParams("DensityMatrix: n_qubits must be positive");
  if (mat_.dim() != (std::size_t{1} << n_qubits_))
    throw DimMismatch("DensityMatrix: dim must equal 2^n_qubits");
  mat_.check_finite("DensityMatrix");
  if (hermiticity_defect(mat_) > 1e-12)
    throw NotHermitian("DensityMatrix: not Hermitian within 1e-12");
  if (std::abs(trace(mat_) - cplx(1.0)) > 1e-12)
    throw BadParams("DensityMatrix: trace differs from 1 by more than 1e-12");
  const Spectrum spec = eig_hermitian(mat_, /*want_vectors=*/false);
  if (spec.eigenvalues.back() < -1e-10)
    throw BadParams("DensityMatrix: minimum eigenvalue below -1e-10");
}

namespace {

// Bit position (from the LSB) of qubit q in an n-qubit index.
inline int bitpos(int n_qubits, int q) { return n_qubits - 1 - q; }

void check_keep(int n_qubits, const std::vector<int>& keep) {
  if (keep.empty()) throw BadIndex("partial_trace: keep set must be nonempty");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n_qubits)
      throw BadIndex("partial_trace: qubit index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw BadIndex("partial_trace: keep set must be strictly ascending");
  }
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.n_qubits();
  check_keep(n, keep);
  const int nk = static_cast<int>(keep.size());
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);

  const std::size_t dk = std::size_t{1} << nk;
  const std::size_t dr = std::size_t{1} << rest.size();
  auto compose = [&](std::size_t ik, std::size_t ir) {
    std::size_t idx = 0;
    for (int t = 0; t < nk; ++t)
      if (ik >> (nk - 1 - t) & 1) idx |= std::size_t{1} << bitpos(n, keep[t]);
    for (std::size_t t = 0; t < rest.size(); ++t)
      if (ir >> (rest.size() - 1 - t) & 1) idx |= std::size_t{1} << bitpos(n, rest[t]);
    return idx;
  };

  ComplexMatrix out(dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < dr; ++r) s += rho.mat()(compose(i, r), compose(j, r));
      out(i, j) = s;
    }
  return DensityMatrix(nk, std::move(out));
}

DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep) {
  const int n = psi.n_qubits();
  check_keep(n, keep);
  const int nk = static_cast<int>(keep.size());
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);

  const std::size_t dk = std::size_t{1} << nk;
  const std::size_t dr = std::size_t{1} << rest.size();
  auto compose = [&](std::size_t ik, std::size_t ir) {
    std::size_t idx = 0;
    for (int t = 0; t < nk; ++t)
      if (ik >> (nk - 1 - t) & 1) idx |= std::size_t{1} << bitpos(n, keep[t]);
    for (std::size_t t = 0; t < rest.size(); ++t)
      if (ir >> (rest.size() - 1 - t) & 1) idx |= std::size_t{1} << bitpos(n, rest[t]);
    return idx;
  };

  ComplexMatrix out(dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < dr; ++r)
        s += psi.amps()[compose(i, r)] * std::conj(psi.amps()[compose(j, r)]);
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
  return DensityMatrix(nk, std::move(out));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int n_qubits, int cut) {
  if (cut < 0 || cut >= n_qubits) throw BadIndex("partial_transpose: cut out of range");
  if (m.dim() != (std::size_t{1} << n_qubits))
    throw DimMismatch("partial_transpose: dim must equal 2^n_qubits");
  const std::size_t mask = std::size_t{1} << bitpos(n_qubits, cut);
  ComplexMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const std::size_t rr = (r & ~mask) | (c & mask);
      const std::size_t cc = (c & ~mask) | (r & mask);
      out(rr, cc) = m(r, c);
    }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int cut) {
  return partial_transpose(rho.mat(), rho.n_qubits(), cut);
}

ComplexMatrix outer(const PureState& psi) {
  const std::size_t d = psi.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      out(i, j) = psi.amps()[i] * std::conj(psi.amps()[j]);
  return out;
}

}  // namespace boundlab
