#include "cyclotope/reference_table.hpp"

namespace cyclotope {

// Transcribed cell-for-cell from the published table; coefficients are
// listed low degree first. Do not "correct" entries here: the point of this
// data is to compare computation against the reference exactly as printed.
const std::vector<ReferenceCell>& reference_hstar_cells() {
  static const std::vector<ReferenceCell> cells = {
      {1, 1, {1}},
      {1, 2, {1, 1}},
      {1, 3, {1, 4, 1}},
      {1, 4, {1, 11, 11, 1}},
      {1, 5, {1, 26, 66, 26, 1}},
      {1, 6, {1, 57, 302, 302, 57, 1}},
      {1, 7, {1, 120, 1191, 2416, 1191, 120, 1}},
      {1, 8, {1, 247, 4293, 15619, 15619, 4293, 247, 1}},
      {2, 2, {1}},
      {2, 3, {1, 1}},
      {2, 4, {1, 3, 1}},
      {2, 5, {1, 7, 7, 1}},
      {2, 6, {1, 14, 31, 14, 1}},
      {2, 7, {1, 26, 109, 109, 26, 1}},
      {2, 8, {1, 46, 334, 623, 334, 46, 1}},
      {2, 9, {1, 79, 937, 2951, 2951, 937, 79, 1}},
      {3, 3, {1}},
      {3, 4, {1, 1}},
      {3, 5, {1, 3, 1}},
      {3, 6, {1, 6, 6, 1}},
      {3, 7, {1, 14, 31, 14, 1}},
      {3, 8, {1, 19, 71, 71, 19, 1}},
      {3, 9, {1, 31, 191, 340, 191, 31, 1}},
      {3, 10, {1, 49, 472, 1365, 1365, 472, 49, 1}},
      {4, 4, {1}},
      {4, 5, {1, 1}},
      {4, 6, {1, 3, 1}},
      {4, 7, {1, 6, 6, 1}},
      {4, 8, {1, 10, 20, 10, 1}},
      {4, 9, {1, 16, 56, 56, 16, 1}},
      {4, 10, {1, 25, 140, 242, 140, 25, 1}},
      {5, 5, {1}},
      {5, 6, {1, 1}},
      {5, 7, {1, 3, 1}},
      {5, 8, {1, 6, 6, 1}},
      {5, 9, {1, 10, 20, 10, 1}},
      {5, 10, {1, 15, 50, 50, 15, 1}},
      {6, 6, {1}},
      {6, 7, {1, 1}},
      {6, 8, {1, 3, 1}},
      {6, 9, {1, 6, 6, 1}},
      {6, 10, {1, 10, 20, 10, 1}},
      {7, 7, {1}},
      {7, 8, {1, 1}},
      {7, 9, {1, 3, 1}},
      {7, 10, {1, 6, 6, 1}},
  };
  return cells;
}

}  // namespace cyclotope
