#pragma once

#include <cstddef>
#include <vector>

#include "vbraid/matrix.hpp"

namespace vbraid {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix to_int_matrix(const RingMatrix& m);
RingMatrix from_int_matrix(const IntMatrix& m, std::size_t cols);

struct SnfResult {
  // Length min(rows, cols); each entry divides the next, zeros trail.
  std::vector<Integer> diagonal;
  std::size_t rank = 0;
};

// Left transform U with U * A * V = D, together with U^-1.
struct SnfWithTransform {
  SnfResult form;
  IntMatrix left;
  IntMatrix left_inverse;
};

SnfResult smith_normal_form(const RingMatrix& m);
SnfWithTransform smith_with_transform(const RingMatrix& m);

}  // namespace vbraid
