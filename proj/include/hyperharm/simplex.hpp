#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace hyperharm {

/// Visits every weakly increasing tuple 0 <= i_1 <= ... <= i_m <= n in
/// odometer order (i_1 moves fastest). The visitor receives m + 1 indices:
/// entries 0..m-1 are i_1..i_m and entry m is the fixed bound i_{m+1} = n.
template <class F>
void for_each_simplex_point(long m, long n, F&& visit) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("for_each_simplex_point: m and n must be nonnegative");
    std::vector<long> idx(static_cast<std::size_t>(m) + 1, 0);
    idx.back() = n;
    for (;;) {
        visit(std::span<const long>(idx));
        long r = 0;
        while (r < m && idx[r] == idx[r + 1])
            ++r;
        if (r == m)
            return;
        ++idx[r];
        for (long j = 0; j < r; ++j)
            idx[j] = 0;
    }
}

} // namespace hyperharm
