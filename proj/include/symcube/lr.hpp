#pragma once

#include <map>

#include "symcube/partition.hpp"

namespace symcube {

/// Littlewood-Richardson coefficient N_{lambda,mu}^{nu}: the number of
/// skew tableaux of shape nu/lambda and content mu whose reverse reading
/// word (right-to-left within rows, rows top-to-bottom) is a lattice word.
/// Returns 0 unless size(nu) = size(lambda) + size(mu) and lambda is
/// contained in nu.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// All nu with length(nu) <= max_length and N_{lambda,mu}^{nu} > 0,
/// with multiplicities.
std::map<Partition, long> lr_expand(const Partition& lambda, const Partition& mu,
                                    int max_length);

} // namespace symcube
