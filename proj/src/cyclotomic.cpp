#include "cyclotomic.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fuglede::detail {

namespace {

int mobius(std::int64_t n) {
  int result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::vector<std::int64_t> cyclotomic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  // Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}: multiply first, then divide exactly.
  std::vector<std::int64_t> poly{1};
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  for (auto d : divisors) {
    if (mobius(n / d) != 1) continue;
    std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(d),
                                   0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + static_cast<std::size_t>(d)] += poly[k];
      next[k] -= poly[k];
    }
    poly = std::move(next);
  }
  for (auto d : divisors) {
    if (mobius(n / d) != -1) continue;
    const auto ud = static_cast<std::size_t>(d);
    std::vector<std::int64_t> q(poly.size() - ud, 0);
    // p[k] = q[k-d] - q[k]
    for (std::size_t k = 0; k < q.size(); ++k) {
      q[k] = (k >= ud ? q[k - ud] : 0) - poly[k];
    }
    poly = std::move(q);
  }
  return poly;
}

bool vanishes_at_primitive_root(const std::vector<std::int64_t>& coeffs) {
  const auto n = static_cast<std::int64_t>(coeffs.size());
  if (n == 0) return true;
  const auto phi = cyclotomic(n);
  const std::size_t deg = phi.size() - 1;
  std::vector<__int128> r(coeffs.begin(), coeffs.end());
  constexpr __int128 kLimit = static_cast<__int128>(1) << 90;
  for (std::size_t k = r.size(); k-- > deg;) {
    const __int128 c = r[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) {
      r[k - deg + i] -= c * phi[i];
      if (r[k - deg + i] > kLimit || r[k - deg + i] < -kLimit) return false;
    }
  }
  for (std::size_t k = 0; k < deg && k < r.size(); ++k) {
    if (r[k] != 0) return false;
  }
  return true;
}

}  // namespace fuglede::detail
