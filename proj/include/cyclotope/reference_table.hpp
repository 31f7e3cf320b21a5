#pragma once

#include <vector>

namespace cyclotope {

// One published reference value: the h*-polynomial of the width-k window
// polytope in dimension n, coefficients low degree first.
struct ReferenceCell {
  int k;
  int n;
  std::vector<long long> hstar;
};

// The reference h*-table cells with n <= 10, verbatim as published. The
// verification suite reproduces each cell from scratch and compares.
const std::vector<ReferenceCell>& reference_hstar_cells();

}  // namespace cyclotope
