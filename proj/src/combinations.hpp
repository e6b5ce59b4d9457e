#ifndef ITDOM_SRC_COMBINATIONS_HPP
#define ITDOM_SRC_COMBINATIONS_HPP

#include <numeric>
#include <vector>

namespace itdom::detail {

// Visits every k-subset of {0, ..., m-1} in lexicographic order as a sorted
// index vector. fn returns true to stop; the function reports whether a call
// stopped the scan.
template <typename Fn>
bool for_each_combination(int m, int k, Fn&& fn) {
    if (k < 0 || k > m) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (fn(static_cast<const std::vector<int>&>(idx))) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace itdom::detail

#endif
