#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace pmrsim {

using complexd = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;

// Hard cap on dense-operator construction; override per call where a
// deliberately larger run is wanted.
inline constexpr int kDenseSiteCap = 12;

// Throws capacity_error if 2^n exceeds the dense guardrail.
void ensure_dense_capacity(int n, int site_cap = kDenseSiteCap);

// Weighted Pauli string  weight * i^phase_pow * (site tensor product), where a
// site carries X for an x_mask bit, Z for a z_mask bit and Y (the Hermitian
// matrix) when both bits are set.  Bit 0 is the least-significant bit of the
// basis index.
struct PauliTerm {
  int n = 0;
  double weight = 1.0;
  std::uint8_t phase_pow = 0;  // phase = i^phase_pow, phase_pow in {0,1,2,3}
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;

  complexd phase() const;
  bool is_diagonal() const { return x_mask == 0; }
  bool is_identity() const { return x_mask == 0 && z_mask == 0; }
};

// Group product a*b with accumulated phase in {1, i, -1, -i}.
PauliTerm pauli_product(const PauliTerm& a, const PauliTerm& b);

DenseOperator pauli_to_dense(const PauliTerm& p, int n,
                             int site_cap = kDenseSiteCap);

// Computational-basis state |z> on n sites.
struct BasisState {
  std::uint64_t index = 0;
  int n = 0;
};

// Real diagonal operator  constant + sum_k coeff_k * Z^{z_mask_k}, evaluated
// without building a dense matrix.  All stored z_masks are nonzero; the
// identity part lives in `constant`.
struct DiagonalPolynomial {
  int n = 0;
  double constant = 0.0;
  struct Term {
    std::uint64_t z_mask = 0;
    double coeff = 0.0;
  };
  std::vector<Term> terms;

  void add(std::uint64_t z_mask, double coeff);
  bool empty() const { return constant == 0.0 && terms.empty(); }
};

// <z|D|z> = constant + sum coeff * (-1)^popcount(z_mask & z).
double diag_eval(const DiagonalPolynomial& d, BasisState z);

// Exact max_z |<z|D|z>|, enumerating only the support bits of the stored
// masks.  Throws capacity_error if the support exceeds `support_cap` bits.
double diag_max_abs(const DiagonalPolynomial& d, int support_cap = 24);

DenseOperator diag_to_dense(const DiagonalPolynomial& d,
                            int site_cap = kDenseSiteCap);

// Sum of weighted Pauli strings plus an identity offset, densified.
DenseOperator terms_to_dense(const std::vector<PauliTerm>& terms, int n,
                             double identity_coeff = 0.0,
                             int site_cap = kDenseSiteCap);

}  // namespace pmrsim
