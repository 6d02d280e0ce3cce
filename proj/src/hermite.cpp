#include "mhq/hermite.hpp"

#include <stdexcept>

namespace mhq {

Real hermite_value(int m, const Real& x) {
    if (m < 0) throw std::invalid_argument("hermite_value: negative degree");
    Real prev(1);
    if (m == 0) return prev;
    Real cur = 2 * x;
    for (int k = 1; k < m; ++k) {
        Real next = 2 * x * cur - 2 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<std::vector<Int>> hermite_coefficient_table(int max_degree) {
    std::vector<std::vector<Int>> table(max_degree + 1);
    table[0] = {Int(1)};
    if (max_degree >= 1) table[1] = {Int(0), Int(2)};
    for (int m = 1; m < max_degree; ++m) {
        std::vector<Int> next(m + 2, Int(0));
        for (size_t i = 0; i < table[m].size(); ++i) next[i + 1] += 2 * table[m][i];
        for (size_t i = 0; i < table[m - 1].size(); ++i) next[i] -= 2 * m * table[m - 1][i];
        table[m + 1] = std::move(next);
    }
    return table;
}

}  // namespace mhq
