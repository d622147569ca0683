#include "pmrsim/spin.hpp"

#include <bit>

#include "pmrsim/errors.hpp"

namespace pmrsim {

namespace {

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

complexd ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

void ensure_dense_capacity(int n, int site_cap) {
  if (n < 0) throw validation_error("site count must be nonnegative");
  if (n > site_cap) {
    throw capacity_error("dense operator on " + std::to_string(n) +
                         " sites exceeds cap of " + std::to_string(site_cap));
  }
}

complexd PauliTerm::phase() const { return ipow(phase_pow); }

PauliTerm pauli_product(const PauliTerm& a, const PauliTerm& b) {
  if (a.n != b.n) throw dimension_error("pauli_product: mismatched site counts");
  PauliTerm r;
  r.n = a.n;
  r.weight = a.weight * b.weight;
  r.x_mask = a.x_mask ^ b.x_mask;
  r.z_mask = a.z_mask ^ b.z_mask;
  // With the Hermitian site basis written as i^c X^x Z^z (c = |x & z|), the
  // product phase follows from commuting b's X block through a's Z block.
  const int ca = std::popcount(a.x_mask & a.z_mask);
  const int cb = std::popcount(b.x_mask & b.z_mask);
  const int cr = std::popcount(r.x_mask & r.z_mask);
  int k = int(a.phase_pow) + int(b.phase_pow) + ca + cb - cr +
          2 * std::popcount(a.z_mask & b.x_mask);
  r.phase_pow = std::uint8_t(((k % 4) + 4) % 4);
  return r;
}

DenseOperator pauli_to_dense(const PauliTerm& p, int n, int site_cap) {
  ensure_dense_capacity(n, site_cap);
  const std::uint64_t dim = std::uint64_t(1) << n;
  if (n < 64 && ((p.x_mask | p.z_mask) >> n) != 0)
    throw dimension_error("pauli_to_dense: mask bit beyond site count");
  DenseOperator m = DenseOperator::Zero(dim, dim);
  // <z ^ x_mask| P |z> = weight * i^(phase_pow + |x&z|) * (-1)^|z_mask & z|.
  const int c = std::popcount(p.x_mask & p.z_mask);
  complexd base = p.weight * PauliTerm{.phase_pow = std::uint8_t((p.phase_pow + c) & 3)}.phase();
  for (std::uint64_t z = 0; z < dim; ++z) {
    const double sign = parity(p.z_mask & z) ? -1.0 : 1.0;
    m(z ^ p.x_mask, z) = base * sign;
  }
  return m;
}

void DiagonalPolynomial::add(std::uint64_t z_mask, double coeff) {
  if (z_mask == 0) {
    constant += coeff;
    return;
  }
  for (auto& t : terms) {
    if (t.z_mask == z_mask) {
      t.coeff += coeff;
      return;
    }
  }
  terms.push_back({z_mask, coeff});
}

double diag_eval(const DiagonalPolynomial& d, BasisState z) {
  double v = d.constant;
  for (const auto& t : d.terms)
    v += parity(t.z_mask & z.index) ? -t.coeff : t.coeff;
  return v;
}

double diag_max_abs(const DiagonalPolynomial& d, int support_cap) {
  std::uint64_t support = 0;
  for (const auto& t : d.terms) support |= t.z_mask;
  const int bits = std::popcount(support);
  if (bits > support_cap)
    throw capacity_error("diag_max_abs: support of " + std::to_string(bits) +
                         " bits exceeds enumeration cap");
  // Map support bits to a compact index and enumerate only those.
  std::vector<int> bit_of;
  for (int b = 0; b < 64; ++b)
    if (support >> b & 1) bit_of.push_back(b);
  double best = 0.0;
  for (std::uint64_t c = 0; c < (std::uint64_t(1) << bits); ++c) {
    std::uint64_t z = 0;
    for (int i = 0; i < bits; ++i)
      if (c >> i & 1) z |= std::uint64_t(1) << bit_of[i];
    best = std::max(best, std::abs(diag_eval(d, {z, d.n})));
  }
  if (d.terms.empty()) best = std::abs(d.constant);
  return best;
}

DenseOperator diag_to_dense(const DiagonalPolynomial& d, int site_cap) {
  ensure_dense_capacity(d.n, site_cap);
  const std::uint64_t dim = std::uint64_t(1) << d.n;
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (std::uint64_t z = 0; z < dim; ++z) m(z, z) = diag_eval(d, {z, d.n});
  return m;
}

DenseOperator terms_to_dense(const std::vector<PauliTerm>& terms, int n,
                             double identity_coeff, int site_cap) {
  ensure_dense_capacity(n, site_cap);
  const std::uint64_t dim = std::uint64_t(1) << n;
  DenseOperator m =
      DenseOperator::Identity(dim, dim) * complexd(identity_coeff, 0.0);
  for (const auto& t : terms) m += pauli_to_dense(t, n, site_cap);
  return m;
}

}  // namespace pmrsim
