#pragma once

#include <map>
#include <optional>
#include <vector>

#include "symcube/dims.hpp"
#include "symcube/lr.hpp"
#include "symcube/numeric.hpp"
#include "symcube/partition.hpp"

namespace symcube {

enum class Algebra { gl, sl };

const char* algebra_name(Algebra a);
Algebra algebra_from_name(const std::string& s);  // throws invalid_input

/// Decomposition of S^k(gl_n) or S^k(sl_n) into SL_n irreducibles, keyed
/// by zero-sum dominant GL weights.
struct Decomposition {
    Algebra algebra = Algebra::gl;
    int k = 0;
    int n = 0;
    std::map<GLWeight, long> components;

    Int total_dim() const;  // C(n^2+k-1, k) for gl, C(n^2+k-2, k) for sl
};

/// Component of a decomposition joined with its dimension data and, for
/// the cubic case at n >= 6, the matching weight pattern.
struct AnnotatedComponent {
    GLWeight gl_weight;
    std::vector<long> sl_wt;
    std::optional<WeightTemplate> pattern;
    long multiplicity = 0;
    Int dimension;
    long variety_dimension = 0;
};

struct AnnotatedDecomposition {
    Algebra algebra = Algebra::gl;
    int k = 0;
    int n = 0;
    Int total;
    std::vector<AnnotatedComponent> components;
};

/// S^k(gl_n) = sum over lambda |- k (length <= n) of the Cauchy-formula
/// pieces S_lambda tensor S_lambda^*, expanded by Littlewood-Richardson.
/// Verifies dimension conservation before returning.
Decomposition decompose_gl(int k, int n);

/// S^k(sl_n) as the multiset difference of consecutive gl decompositions.
/// A negative multiplicity after subtraction is an internal error.
Decomposition decompose_sl(int k, int n);

/// Join dimension and variety-dimension data onto every component and
/// re-verify the dimension total. Components are ordered by the fixed
/// cubic pattern catalog when it applies (k = 3, n >= 6), then by
/// descending weight.
AnnotatedDecomposition annotate(const Decomposition& d);

/// The nine weight patterns of the cubic decomposition for n >= 6, in
/// presentation order.
const std::vector<WeightTemplate>& symmetric_cube_templates();

} // namespace symcube
