#include "symcube/dims.hpp"

namespace symcube {

Int weyl_dim(const GLWeight& w) {
    if (!w.is_dominant()) throw invalid_input("weyl_dim: weight not dominant");
    Int num = 1, den = 1;
    const auto& e = w.entries;
    for (int i = 0; i < w.n; ++i)
        for (int j = i + 1; j < w.n; ++j) {
            num *= e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    Int q = num / den;
    if (q * den != num) throw internal_error("weyl_dim: non-integral quotient");
    return q;
}

Int weyl_dim(const Partition& p, int n) {
    if (p.length() > n) return 0;  // the Schur functor vanishes
    std::vector<long> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = p.part(i);
    return weyl_dim(GLWeight(n, std::move(e)));
}

std::set<int> removed_nodes(const GLWeight& w) {
    if (!w.is_dominant()) throw invalid_input("removed_nodes: weight not dominant");
    std::set<int> out;
    const auto& e = w.entries;
    for (int j = 1; j < w.n; ++j)
        if (e[static_cast<std::size_t>(j - 1)] > e[static_cast<std::size_t>(j)]) out.insert(j);
    return out;
}

long variety_dim(const GLWeight& w) {
    std::set<int> removed = removed_nodes(w);
    long n = w.n;
    long sum = 0;
    long run = 0;
    for (int j = 1; j <= n - 1; ++j) {
        if (removed.count(j)) {
            sum += run * run + run;
            run = 0;
        } else {
            ++run;
        }
    }
    sum += run * run + run;
    long twice = n * n - n - sum;
    if (twice % 2 != 0) throw internal_error("variety_dim: odd intermediate");
    return twice / 2;
}

} // namespace symcube
