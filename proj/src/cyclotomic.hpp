#pragma once

#include <cstdint>
#include <vector>

namespace fuglede::detail {

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree
/// first.
std::vector<std::int64_t> cyclotomic(std::int64_t n);

/// True iff Σ_k coeffs[k] ζ^k = 0 for a primitive N-th root of unity ζ,
/// where coeffs.size() == N. Returns false if intermediate coefficients
/// overflow, so `true` is always exact.
bool vanishes_at_primitive_root(const std::vector<std::int64_t>& coeffs);

}  // namespace fuglede::detail
