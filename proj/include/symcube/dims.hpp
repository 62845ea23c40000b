#pragma once

#include <set>

#include "symcube/numeric.hpp"
#include "symcube/partition.hpp"

namespace symcube {

/// Weyl dimension formula for a dominant GL_n weight:
/// prod_{i<j} (w_i - w_j + j - i) / (j - i), exact.
Int weyl_dim(const GLWeight& w);

/// Convenience overload: the GL_n irreducible labelled by a partition.
/// Zero when length(p) > n, where the Schur functor vanishes.
Int weyl_dim(const Partition& p, int n);

/// Nodes removed from the A_{n-1} diagram for the closed orbit of the
/// highest weight line: with p = entries(w) - w_n, the set of j < n with
/// p_j > p_{j+1} (the column lengths of the diagram of p).
std::set<int> removed_nodes(const GLWeight& w);

/// Dimension of the closed GL_n-orbit (partial flag variety) in P(V_w):
/// remove removed_nodes(w) from the path graph A_{n-1}, collect component
/// sizes k_i, return (n^2 - n - sum_i (k_i^2 + k_i)) / 2.
long variety_dim(const GLWeight& w);

} // namespace symcube
