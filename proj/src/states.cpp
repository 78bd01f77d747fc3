// SPDX-License-Identifier: Apache-2.0

#include "boundlab/states.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "boundlab/jsonw.hpp"
#include "json.hpp"

namespace boundlab {

namespace {

constexpr double kNetworkTol = 1e-10;

ComplexMatrix mat2(double m00, double m01, double m10, double m11) {
  ComplexMatrix m(2);
  m(0, 0) = m00;
  m(0, 1) = m01;
  m(1, 0) = m10;
  m(1, 1) = m11;
  return m;
}

}  // namespace

ABLSParams::ABLSParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0) || !std::isfinite(a) ||
      !std::isfinite(b) || !std::isfinite(c))
    throw BadParams("ABLSParams: a, b, c must be positive finite reals");
  if (std::abs(a * b - c) <= 1e-9)
    throw BadParams("ABLSParams: ab≠c violated (a*b equals c within 1e-9)");
}

double ABLSParams::normalization() const {
  return 2.0 + a + b + c + 1.0 / a + 1.0 / b + 1.0 / c;
}

ABLSParams ABLSParams::optimal() { return ABLSParams(0.3460, 0.3460, 1.0 / 0.3460); }

DCTParams::DCTParams(double l0p, double l0m, double l01, double l10, double l11)
    : lambda0_plus(l0p), lambda0_minus(l0m), lambda01(l01), lambda10(l10), lambda11(l11) {
  const double ls[5] = {l0p, l0m, l01, l10, l11};
  for (double l : ls)
    if (!(l >= 0.0) || !std::isfinite(l))
      throw BadParams("DCTParams: lambdas must be non-negative finite reals");
  const double norm = l0p + l0m + 2.0 * (l01 + l10 + l11);
  if (std::abs(norm - 1.0) > 1e-12)
    throw BadParams("DCTParams: normalization condition violated");
  if (l0p < l0m) throw BadParams("DCTParams: Delta = lambda0+ - lambda0- must be >= 0");
  if (gamma() <= 1e-9)
    throw BadParams("DCTParams: gamma = sqrt(lambda0+ + lambda0-) must exceed 1e-9");
}

double DCTParams::gamma() const { return std::sqrt(lambda0_plus + lambda0_minus); }
double DCTParams::delta() const { return lambda0_plus - lambda0_minus; }

DCTParams DCTParams::eq24() {
  return DCTParams(1.0 / 3.0, 0.0, 1.0 / 6.0, 0.0, 1.0 / 6.0);
}

// --- ABLS family ---

DensityMatrix abls_direct(const ABLSParams& p) {
  const double n = p.normalization();
  ComplexMatrix m(8);
  // 2|GHZ><GHZ| contributes 1/N to the four corners.
  m(0, 0) = 1.0 / n;
  m(0, 7) = 1.0 / n;
  m(7, 0) = 1.0 / n;
  m(7, 7) = 1.0 / n;
  m(1, 1) = p.a / n;
  m(2, 2) = p.b / n;
  m(3, 3) = p.c / n;
  m(4, 4) = 1.0 / (p.c * n);
  m(5, 5) = 1.0 / (p.b * n);
  m(6, 6) = 1.0 / (p.a * n);
  return DensityMatrix(3, std::move(m));
}

std::pair<double, double> abls_alpha_beta(const ABLSParams& p) {
  const double n1 = std::sqrt(p.b / (1.0 + p.b));
  const double n2 = 1.0 / std::sqrt(1.0 + p.b);
  const double n3 = std::sqrt(p.c / (1.0 + p.a * p.c));
  const double n4 = std::sqrt(p.a / (p.a + p.c));
  const double t = (n1 * n2) / (n3 * n4);
  const double alpha = 1.0 / std::sqrt(1.0 + t * t);
  return {alpha, alpha * t};
}

PureState abls_psi_bound(const ABLSParams& p) {
  const double rn = 1.0 / std::sqrt(p.normalization());
  std::vector<cplx> amps = {rn,
                            rn * std::sqrt(p.a),
                            rn * std::sqrt(p.b),
                            rn * std::sqrt(p.c),
                            rn / std::sqrt(p.c),
                            rn / std::sqrt(p.b),
                            rn / std::sqrt(p.a),
                            rn};
  return PureState(3, std::move(amps));
}

namespace {

void add_abls_prep_gates(Circuit& circ, const ABLSParams& p) {
  const double a = p.a, b = p.b, c = p.c;
  const double n1 = std::sqrt(b / (1.0 + b));
  const double n2 = 1.0 / std::sqrt(1.0 + b);
  const double n3 = std::sqrt(c / (1.0 + a * c));
  const double n4 = std::sqrt(a / (a + c));
  const auto [alpha, beta] = abls_alpha_beta(p);
  const double sb = std::sqrt(b);

  circ.add(single_qubit("LU1", mat2(n1, n1 / sb, n1 / sb, -n1), 0));
  circ.add(single_qubit("LU2", mat2(n2, n2 * sb, n2 * sb, -n2), 1));
  // Row convention fixed by requiring LU|0> = alpha|0> + beta|1>, which
  // reproduces the post-LU product state of the preparation chain.
  circ.add(single_qubit("LU3", mat2(alpha, beta, beta, -alpha), 2));

  const double x1 = std::sqrt(a) - std::sqrt(1.0 / (b * c));
  const double y1 = std::sqrt(a / b) + std::sqrt(1.0 / c);
  circ.add(controlled_single_qubit(
      "CU31", mat2(n1 * n3 * x1, n1 * n3 * y1, n1 * n3 * y1, -n1 * n3 * x1), 2, true, 0));

  const double x2 = 1.0 - std::sqrt(b * c / a);
  const double y2 = sb + std::sqrt(c / a);
  circ.add(controlled_single_qubit(
      "CU32", mat2(n2 * n4 * x2, n2 * n4 * y2, n2 * n4 * y2, -n2 * n4 * x2), 2, true, 1));

  circ.add(cnot(0, 2));
}

}  // namespace

Circuit abls_prep_circuit(const ABLSParams& p) {
  Circuit circ(3);
  add_abls_prep_gates(circ, p);
  return circ;
}

Circuit abls_network_circuit(const ABLSParams& p) {
  Circuit circ(6);
  add_abls_prep_gates(circ, p);
  circ.add(cnot(0, 3));
  circ.add(cnot(1, 4));
  circ.add(cnot(2, 5));
  circ.add(cnot(3, 4));
  circ.add(cnot(3, 5));
  circ.add(toffoli3({0, 1, 2}, 3));
  return circ;
}

PureState abls_purification(const ABLSParams& p) {
  return run(abls_network_circuit(p), PureState::basis(6, 0));
}

DensityMatrix abls_network(const ABLSParams& p) {
  const DensityMatrix rho = reduced_density(abls_purification(p), {0, 1, 2});
  if (max_norm_distance(rho.mat(), abls_direct(p).mat()) > kNetworkTol)
    throw Error("abls_network: trace-out deviates from direct assembly");
  return rho;
}

// --- DCT family ---

DensityMatrix dct_direct(const DCTParams& p) {
  const double g = 0.5 * (p.lambda0_plus + p.lambda0_minus);
  const double corner = 0.5 * p.delta();
  ComplexMatrix m(8);
  m(0, 0) = g;
  m(1, 1) = p.lambda11;
  m(2, 2) = p.lambda01;
  m(3, 3) = p.lambda10;
  m(4, 4) = p.lambda10;
  m(5, 5) = p.lambda01;
  m(6, 6) = p.lambda11;
  m(7, 7) = g;
  m(0, 7) = corner;
  m(7, 0) = corner;
  return DensityMatrix(3, std::move(m));
}

std::pair<double, double> dct_schmidt_coefficients(const DCTParams& p) {
  const double det = p.gamma() * std::sqrt(2.0 * p.lambda10) -
                     2.0 * std::sqrt(p.lambda01 * p.lambda11);
  const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * det * det));
  return {std::sqrt(0.5 * (1.0 + disc)), std::sqrt(std::max(0.0, 0.5 * (1.0 - disc)))};
}

namespace {

struct SchmidtPair {
  double alpha_plus, alpha_minus;
  std::array<double, 2> u_plus, u_minus;  // right vectors (qubit 3)
  std::array<double, 2> v_plus, v_minus;  // left vectors (qubit 2)
};

std::array<double, 2> sign_fix(std::array<double, 2> v) {
  const double lead = std::abs(v[0]) > 1e-12 ? v[0] : v[1];
  if (lead < 0.0) {
    v[0] = -v[0];
    v[1] = -v[1];
  }
  return v;
}

// Schmidt decomposition of the 2x2 coefficient matrix C of the target state,
// from the closed-form eigenproblem of C^T C.
SchmidtPair dct_schmidt(const DCTParams& p) {
  const double c00 = p.gamma();
  const double c01 = std::sqrt(2.0 * p.lambda11);
  const double c10 = std::sqrt(2.0 * p.lambda01);
  const double c11 = std::sqrt(2.0 * p.lambda10);

  const double m00 = c00 * c00 + c10 * c10;
  const double m01 = c00 * c01 + c10 * c11;
  const double m11 = c01 * c01 + c11 * c11;

  SchmidtPair sp{};
  const auto [ap, am] = dct_schmidt_coefficients(p);
  sp.alpha_plus = ap;
  sp.alpha_minus = am;
  const double lp = ap * ap;

  if (std::abs(m01) > 1e-13) {
    // Pick the better-conditioned eigenvector formula.
    std::array<double, 2> u{m01, lp - m00};
    if (std::abs(lp - m11) + std::abs(m01) > std::abs(lp - m00) + std::abs(m01))
      u = {lp - m11, m01};
    const double nrm = std::hypot(u[0], u[1]);
    if (nrm < 1e-13) throw SchmidtFailure("dct_schmidt: eigenvector degenerate");
    sp.u_plus = sign_fix({u[0] / nrm, u[1] / nrm});
  } else {
    sp.u_plus = (m00 >= m11) ? std::array<double, 2>{1.0, 0.0}
                             : std::array<double, 2>{0.0, 1.0};
  }
  sp.u_minus = sign_fix({-sp.u_plus[1], sp.u_plus[0]});

  auto image = [&](const std::array<double, 2>& u) {
    return std::array<double, 2>{c00 * u[0] + c01 * u[1], c10 * u[0] + c11 * u[1]};
  };
  if (sp.alpha_plus > 1e-9) {
    const auto w = image(sp.u_plus);
    sp.v_plus = {w[0] / sp.alpha_plus, w[1] / sp.alpha_plus};
  } else {
    throw SchmidtFailure("dct_schmidt: leading Schmidt coefficient vanishes");
  }
  if (sp.alpha_minus > 1e-9) {
    const auto w = image(sp.u_minus);
    sp.v_minus = {w[0] / sp.alpha_minus, w[1] / sp.alpha_minus};
  } else {
    sp.v_minus = {-sp.v_plus[1], sp.v_plus[0]};
  }

  // Reconstruction guard; also catches sign bookkeeping mistakes.
  const double r00 = sp.alpha_plus * sp.v_plus[0] * sp.u_plus[0] +
                     sp.alpha_minus * sp.v_minus[0] * sp.u_minus[0];
  const double r01 = sp.alpha_plus * sp.v_plus[0] * sp.u_plus[1] +
                     sp.alpha_minus * sp.v_minus[0] * sp.u_minus[1];
  const double r10 = sp.alpha_plus * sp.v_plus[1] * sp.u_plus[0] +
                     sp.alpha_minus * sp.v_minus[1] * sp.u_minus[0];
  const double r11 = sp.alpha_plus * sp.v_plus[1] * sp.u_plus[1] +
                     sp.alpha_minus * sp.v_minus[1] * sp.u_minus[1];
  const double err = std::max(std::max(std::abs(r00 - c00), std::abs(r01 - c01)),
                              std::max(std::abs(r10 - c10), std::abs(r11 - c11)));
  if (err > 1e-9) throw SchmidtFailure("dct_schmidt: reconstruction exceeds tolerance");
  return sp;
}

void add_dct_prep_gates(Circuit& circ, const DCTParams& p) {
  const SchmidtPair sp = dct_schmidt(p);
  circ.add(single_qubit(
      "LU1", mat2(sp.alpha_plus, sp.alpha_minus, sp.alpha_minus, -sp.alpha_plus), 1));
  circ.add(cnot(1, 2));
  circ.add(single_qubit(
      "V2", mat2(sp.v_plus[0], sp.v_minus[0], sp.v_plus[1], sp.v_minus[1]), 1));
  circ.add(single_qubit(
      "U2", mat2(sp.u_plus[0], sp.u_minus[0], sp.u_plus[1], sp.u_minus[1]), 2));
  circ.add(hadamard(0));
}

}  // namespace

PureState dct_psi(const DCTParams& p) {
  const double g = p.gamma() / std::sqrt(2.0);
  const double s01 = std::sqrt(p.lambda01);
  const double s10 = std::sqrt(p.lambda10);
  const double s11 = std::sqrt(p.lambda11);
  std::vector<cplx> amps = {g, s11, s01, s10, g, s11, s01, s10};
  return PureState(3, std::move(amps));
}

Circuit dct_prep_circuit(const DCTParams& p) {
  Circuit circ(3);
  add_dct_prep_gates(circ, p);
  return circ;
}

Circuit dct_network_circuit(const DCTParams& p) {
  Circuit circ(6);
  add_dct_prep_gates(circ, p);
  circ.add(cnot(0, 3));
  circ.add(cnot(1, 4));
  circ.add(cnot(2, 5));
  const double g = p.gamma();
  circ.add(Gate("CU00",
                mat2(std::sqrt(p.lambda0_minus) / g, std::sqrt(p.lambda0_plus) / g,
                     std::sqrt(p.lambda0_plus) / g, -std::sqrt(p.lambda0_minus) / g),
                {3}, {{1, false}, {2, false}}));
  circ.add(Gate("TOFF100", mat2(0.0, 1.0, 1.0, 0.0), {3},
                {{0, true}, {1, false}, {2, false}}));
  circ.add(cnot(0, 1));
  circ.add(cnot(0, 2));
  return circ;
}

PureState dct_purification(const DCTParams& p) {
  return run(dct_network_circuit(p), PureState::basis(6, 0));
}

DensityMatrix dct_network(const DCTParams& p) {
  const DensityMatrix rho = reduced_density(dct_purification(p), {0, 1, 2});
  if (max_norm_distance(rho.mat(), dct_direct(p).mat()) > kNetworkTol)
    throw Error("dct_network: trace-out deviates from direct assembly");
  return rho;
}

// --- serialization ---

std::string state_to_json(const DensityMatrix& rho) {
  JsonWriter w;
  w.begin_object();
  w.field("n_qubits", rho.n_qubits());
  w.key("entries");
  w.begin_array();
  for (const cplx& z : rho.mat().entries()) {
    w.begin_array();
    w.value(z.real());
    w.value(z.imag());
    w.end_array();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

DensityMatrix state_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int n = j.at("n_qubits").get<int>();
  const auto& entries = j.at("entries");
  const std::size_t dim = std::size_t{1} << n;
  if (entries.size() != dim * dim)
    throw DimMismatch("state_from_json: entries length must equal dim^2");
  std::vector<cplx> a(dim * dim);
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = cplx(entries[i][0].get<double>(), entries[i][1].get<double>());
  return DensityMatrix(n, ComplexMatrix(dim, std::move(a)));
}

std::string pretty(const ComplexMatrix& m) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const cplx z = m(i, j);
      std::snprintf(buf, sizeof buf, "%9.6f%+9.6fi ", z.real(), z.imag());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace boundlab
