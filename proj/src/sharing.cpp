#include "unnet/sharing.hpp"

#include <algorithm>
#include <stdexcept>

namespace unnet {

namespace {

void check_parameters(const PrimeField& f, int d, int k) {
  if (d < 1 || d > k || static_cast<std::uint32_t>(k) >= f.modulus())
    throw std::invalid_argument("sharing: need 1 <= d <= k < p");
}

// Evaluate secret + coeffs[0] x + ... via Horner.
std::uint32_t eval_poly(const PrimeField& f, std::uint32_t secret,
                        std::span<const std::uint32_t> coeffs, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs.size(); i > 0; --i) acc = f.mul(f.add(acc, coeffs[i - 1]), x);
  return f.add(acc, secret);
}

}  // namespace

ShareVector share_with_coefficients(const PrimeField& f, std::uint32_t secret,
                                    std::span<const std::uint32_t> coeffs, int k) {
  const int d = static_cast<int>(coeffs.size()) + 1;
  check_parameters(f, d, k);
  if (secret >= f.modulus())
    throw std::invalid_argument("sharing: secret not reduced mod p");
  ShareVector sv{d, k, {}};
  sv.shares.reserve(k);
  for (int i = 1; i <= k; ++i)
    sv.shares.push_back({static_cast<std::uint32_t>(i),
                         eval_poly(f, secret, coeffs, static_cast<std::uint32_t>(i))});
  return sv;
}

ShareVector share_secret(const PrimeField& f, std::uint32_t secret, int d, int k,
                         SplitMix64& rng) {
  check_parameters(f, d, k);
  std::vector<std::uint32_t> coeffs(d - 1);
  for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng.below(f.modulus()));
  return share_with_coefficients(f, secret, coeffs, k);
}

std::uint32_t reconstruct_secret(const PrimeField& f, std::span<const Share> shares) {
  if (shares.empty()) throw std::invalid_argument("reconstruct: no shares");
  for (std::size_t i = 0; i < shares.size(); ++i) {
    if (shares[i].x == 0 || shares[i].x >= f.modulus())
      throw std::invalid_argument("reconstruct: share x out of range");
    for (std::size_t j = i + 1; j < shares.size(); ++j)
      if (shares[i].x == shares[j].x)
        throw std::invalid_argument("reconstruct: duplicate share x");
  }
  std::uint32_t secret = 0;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    std::uint32_t num = 1, den = 1;
    for (std::size_t j = 0; j < shares.size(); ++j) {
      if (j == i) continue;
      num = f.mul(num, shares[j].x);
      den = f.mul(den, f.sub(shares[j].x, shares[i].x));
    }
    secret = f.add(secret, f.mul(shares[i].y, f.mul(num, f.inv(den))));
  }
  return secret;
}

namespace {

// Remainder-checked polynomial division; quotient returned only when exact.
std::optional<std::vector<std::uint32_t>> divide_exact(
    const PrimeField& f, std::vector<std::uint32_t> num,
    const std::vector<std::uint32_t>& den) {
  // den is monic of degree den.size()-1
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) num.resize(den.size(), 0);
  std::vector<std::uint32_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::uint32_t c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j)
      num[i - dn + j] = f.sub(num[i - dn + j], f.mul(c, den[j]));
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) return std::nullopt;
  return quot;
}

std::uint32_t eval_coeffs(const PrimeField& f, const std::vector<std::uint32_t>& poly,
                          std::uint32_t x) {
  std::uint32_t acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

}  // namespace

std::optional<std::uint32_t> welch_berlekamp(const PrimeField& f, const ShareVector& sv) {
  const int d = sv.threshold;
  const int k = sv.count;
  check_parameters(f, d, k);
  if (static_cast<int>(sv.shares.size()) != k)
    throw std::invalid_argument("welch_berlekamp: expected all k shares");

  const int budget = (k - d) / 2;
  for (int e = budget; e >= 0; --e) {
    // Unknowns: Q_0..Q_{d+e-1}, then E_0..E_{e-1} (E is monic of degree e).
    // Row i: Q(x_i) - y_i * (E_0 + ... + E_{e-1} x_i^{e-1}) = y_i * x_i^e.
    const int unknowns = d + 2 * e;
    std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(unknowns, 0));
    std::vector<std::uint32_t> rhs(k, 0);
    for (int i = 0; i < k; ++i) {
      const std::uint32_t x = sv.shares[i].x;
      const std::uint32_t y = sv.shares[i].y % f.modulus();
      std::uint32_t xp = 1;
      for (int j = 0; j < d + e; ++j) {
        rows[i][j] = xp;
        xp = f.mul(xp, x);
      }
      xp = 1;
      for (int j = 0; j < e; ++j) {
        rows[i][d + e + j] = f.neg(f.mul(y, xp));
        xp = f.mul(xp, x);
      }
      rhs[i] = f.mul(y, xp);  // xp == x^e here
    }
    const auto solution = solve_linear_system(f, std::move(rows), std::move(rhs));
    if (!solution) continue;

    std::vector<std::uint32_t> q(solution->begin(), solution->begin() + d + e);
    std::vector<std::uint32_t> err(solution->begin() + d + e, solution->end());
    err.push_back(1);  // monic leading term
    const auto quotient = divide_exact(f, q, err);
    if (!quotient) continue;
    if (static_cast<int>(quotient->size()) > d) {
      bool high_zero = true;
      for (std::size_t i = d; i < quotient->size(); ++i) high_zero &= (*quotient)[i] == 0;
      if (!high_zero) continue;
    }
    int mismatches = 0;
    for (const Share& s : sv.shares)
      if (eval_coeffs(f, *quotient, s.x) != s.y % f.modulus()) ++mismatches;
    if (mismatches <= budget) return eval_coeffs(f, *quotient, 0);
  }
  return std::nullopt;
}

}  // namespace unnet
