#pragma once

#include <cstdint>

#include "fuglede/report.hpp"

namespace fuglede {

struct ReproOptions {
  std::uint64_t seed = 20240917;
  int random_sets = 20;  // per randomized stage
  double tol = 1e-10;
};

/// Replays the checkable claims in order:
///   1 golden example (tiling + spectrum), 2 positive autocorrelation,
///   3 factorization + zero-free interval, 4 real zero at 2/3,
///   5 weak-tiling uniqueness trace, 6 D_n structure, 7 Jensen audit and
///   the 3ρ bound, 8 growth bound and witness scan.
/// Each stage is merged under "stage.<k>".
Report paper_repro(const ReproOptions& options = {});

}  // namespace fuglede
