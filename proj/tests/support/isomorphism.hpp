#pragma once

// Brute-force isomorphism test for n <= 8: degree-sequence precheck, then
// all n! vertex bijections. Test-only; the library has no isomorphism
// engine by design.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gbond/graph.hpp"

namespace gbond::testing {

inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n > 8)
        throw std::invalid_argument("brute-force isomorphism limited to n <= 8");
    if (b.order() != n || a.edge_count() != b.edge_count())
        return false;

    std::vector<int> deg_a(n), deg_b(n);
    for (int v = 0; v < n; ++v) {
        deg_a[v] = a.degree(v);
        deg_b[v] = b.degree(v);
    }
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (deg_a[u] != deg_b[perm[u]]) {
                ok = false;
                break;
            }
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v]))
                    ok = false;
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace gbond::testing
