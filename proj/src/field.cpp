#include "unnet/field.hpp"

#include <stdexcept>

namespace unnet {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus must be prime");
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t exp) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t b = base % p_;
  while (exp > 0) {
    if (exp & 1) result = mul(result, b);
    b = mul(b, b);
    exp >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::invalid_argument("PrimeField::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

std::optional<std::vector<std::uint32_t>> solve_linear_system(
    const PrimeField& f, std::vector<std::vector<std::uint32_t>> rows,
    std::vector<std::uint32_t> rhs) {
  const std::size_t m = rows.empty() ? 0 : rows[0].size();
  const std::size_t k = rows.size();
  std::vector<int> pivot_of_col(m, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < k; ++col) {
    std::size_t pivot = rank;
    while (pivot < k && rows[pivot][col] == 0) ++pivot;
    if (pivot == k) continue;
    std::swap(rows[pivot], rows[rank]);
    std::swap(rhs[pivot], rhs[rank]);
    const std::uint32_t scale = f.inv(rows[rank][col]);
    for (std::size_t j = col; j < m; ++j) rows[rank][j] = f.mul(rows[rank][j], scale);
    rhs[rank] = f.mul(rhs[rank], scale);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint32_t factor = rows[r][col];
      for (std::size_t j = col; j < m; ++j)
        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
      rhs[r] = f.sub(rhs[r], f.mul(factor, rhs[rank]));
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < k; ++r)
    if (rhs[r] != 0) return std::nullopt;

  std::vector<std::uint32_t> solution(m, 0);
  for (std::size_t col = 0; col < m; ++col)
    if (pivot_of_col[col] >= 0) solution[col] = rhs[pivot_of_col[col]];
  return solution;
}

}  // namespace unnet
