#include "symcube/plethysm.hpp"

#include <algorithm>

namespace symcube {

const char* algebra_name(Algebra a) { return a == Algebra::gl ? "gl" : "sl"; }

Algebra algebra_from_name(const std::string& s) {
    if (s == "gl") return Algebra::gl;
    if (s == "sl") return Algebra::sl;
    throw invalid_input("unknown algebra \"" + s + "\" (expected gl or sl)");
}

Int Decomposition::total_dim() const {
    long ambient = static_cast<long>(n) * n - (algebra == Algebra::sl ? 1 : 0);
    return binomial(ambient + k - 1, k);
}

namespace {

void check_total(const Decomposition& d) {
    Int sum = 0;
    for (const auto& [w, mult] : d.components) {
        if (mult <= 0) throw internal_error("decomposition holds a non-positive multiplicity");
        if (!w.is_dominant() || !w.is_zero_sum())
            throw internal_error("decomposition weight not dominant zero-sum");
        sum += mult * weyl_dim(w);
    }
    if (sum != d.total_dim())
        throw internal_error("dimension conservation failed for S^" +
                             std::to_string(d.k) + "(" + algebra_name(d.algebra) +
                             "_" + std::to_string(d.n) + ")");
}

} // namespace

Decomposition decompose_gl(int k, int n) {
    if (k < 0) throw invalid_input("decompose_gl: k must be nonnegative");
    if (n < 2) throw invalid_input("decompose_gl: n must be at least 2");
    Decomposition d{Algebra::gl, k, n, {}};
    for (const Partition& lambda : partitions_of(k)) {
        if (lambda.length() > n) continue;  // Schur functor vanishes on C^n
        Partition dual = dual_partition(lambda, n);
        for (const auto& [nu, mult] : lr_expand(lambda, dual, n)) {
            GLWeight w = gl_weight_of_component(nu, lambda.part(0), n);
            d.components[w] += mult;
        }
    }
    check_total(d);
    return d;
}

Decomposition decompose_sl(int k, int n) {
    if (k < 1) throw invalid_input("decompose_sl: k must be positive");
    Decomposition big = decompose_gl(k, n);
    Decomposition small = decompose_gl(k - 1, n);
    Decomposition d{Algebra::sl, k, n, std::move(big.components)};
    for (const auto& [w, mult] : small.components) {
        long remaining = (d.components[w] -= mult);
        if (remaining < 0)
            throw internal_error("sl subtraction went negative at weight " + w.to_string());
        if (remaining == 0) d.components.erase(w);
    }
    check_total(d);
    return d;
}

AnnotatedDecomposition annotate(const Decomposition& d) {
    AnnotatedDecomposition out;
    out.algebra = d.algebra;
    out.k = d.k;
    out.n = d.n;
    out.total = d.total_dim();

    // pattern recognition is presentation-layer and only claimed for the
    // cubic case at n >= 6, where the catalog patterns are pairwise
    // distinguishable; elsewhere weights are reported raw
    std::map<GLWeight, std::pair<std::size_t, WeightTemplate>> patterns;
    if (d.k == 3 && d.n >= 6) {
        const auto& catalog = symmetric_cube_templates();
        for (std::size_t i = 0; i < catalog.size(); ++i)
            patterns.emplace(instantiate(catalog[i], d.n), std::make_pair(i, catalog[i]));
    }

    Int sum = 0;
    for (const auto& [w, mult] : d.components) {
        AnnotatedComponent c;
        c.gl_weight = w;
        c.sl_wt = sl_weight(w);
        auto it = patterns.find(w);
        if (it != patterns.end()) c.pattern = it->second.second;
        c.multiplicity = mult;
        c.dimension = weyl_dim(w);
        c.variety_dimension = variety_dim(w);
        sum += mult * c.dimension;
        out.components.push_back(std::move(c));
    }
    if (sum != out.total) throw internal_error("annotate: dimension total drifted");

    auto order_key = [&](const AnnotatedComponent& c) -> std::size_t {
        auto it = patterns.find(c.gl_weight);
        return it != patterns.end() ? it->second.first : patterns.size();
    };
    std::sort(out.components.begin(), out.components.end(),
              [&](const AnnotatedComponent& a, const AnnotatedComponent& b) {
                  std::size_t ka = order_key(a), kb = order_key(b);
                  if (ka != kb) return ka < kb;
                  return b.gl_weight < a.gl_weight;  // descending weight
              });
    return out;
}

const std::vector<WeightTemplate>& symmetric_cube_templates() {
    static const std::vector<WeightTemplate> catalog = {
        WeightTemplate({}, {}),
        WeightTemplate({1}, {-1}),
        WeightTemplate({2}, {-2}),
        WeightTemplate({3}, {-3}),
        WeightTemplate({1, 1}, {-1, -1}),
        WeightTemplate({2}, {-1, -1}),
        WeightTemplate({1, 1}, {-2}),
        WeightTemplate({2, 1}, {-1, -2}),
        WeightTemplate({1, 1, 1}, {-1, -1, -1}),
    };
    return catalog;
}

} // namespace symcube
