#pragma once

#include <vector>

#include "mhq/scalar.hpp"

namespace mhq {

/// Physicists' Hermite polynomial H_m(x), three-term recurrence
/// H_{m+1} = 2x H_m - 2m H_{m-1}, H_0 = 1, H_1 = 2x.
Real hermite_value(int m, const Real& x);

/// Exact integer coefficient vectors of H_0..H_max, ascending degree.
std::vector<std::vector<Int>> hermite_coefficient_table(int max_degree);

}  // namespace mhq
