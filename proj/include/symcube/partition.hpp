#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "symcube/errors.hpp"

namespace symcube {

/// Weakly decreasing sequence of positive integers; trailing zeros are
/// trimmed on construction so equality is equality of canonical forms.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);
    Partition(std::initializer_list<long> parts)
        : Partition(std::vector<long>(parts)) {}

    const std::vector<long>& parts() const { return parts_; }
    long size() const;                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    long part(int i) const {                 // 0-based, 0 beyond the length
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& inner) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;           // "[2,1]"

private:
    std::vector<long> parts_;
};

/// Integer weight of GL_n: exactly n entries, n kept alongside.
/// Dominance (weakly decreasing entries) is a queried property, not an
/// invariant; only dominant weights label irreducibles.
struct GLWeight {
    int n = 0;
    std::vector<long> entries;

    GLWeight() = default;
    GLWeight(int n_, std::vector<long> e);

    bool is_dominant() const;
    bool is_zero_sum() const;

    friend bool operator==(const GLWeight&, const GLWeight&) = default;
    friend std::strong_ordering operator<=>(const GLWeight& a, const GLWeight& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.entries <=> b.entries;
    }

    std::string to_string() const;           // "[1,0,0,-1]"
};

/// n-parametric dominant weight pattern [prefix..., 0,...,0, ...suffix].
/// Canonical form: prefix carries no trailing zeros, suffix no leading
/// zeros (the variable-length zero block absorbs them).
struct WeightTemplate {
    std::vector<long> prefix;
    std::vector<long> suffix;

    WeightTemplate() = default;
    WeightTemplate(std::vector<long> p, std::vector<long> s);

    friend bool operator==(const WeightTemplate&, const WeightTemplate&) = default;
    friend std::strong_ordering operator<=>(const WeightTemplate& a, const WeightTemplate& b) {
        if (auto c = a.prefix <=> b.prefix; c != 0) return c;
        return a.suffix <=> b.suffix;
    }

    std::string to_string() const;           // "[1,1,0*,-2]"
};

/// Transposed Young diagram; involution.
Partition conjugate(const Partition& p);

/// The SL-dual [p_1 - p_n, p_1 - p_{n-1}, ..., p_1 - p_2] of p padded to
/// length n (trailing zeros trimmed). size = n*p_1 - size(p).
/// Throws invalid_input when length(p) > n.
Partition dual_partition(const Partition& p, int n);

/// Pad nu to length n and subtract lambda1 from every entry, giving the
/// zero-sum dominant GL weight of a component. Requires size(nu) = n*lambda1.
GLWeight gl_weight_of_component(const Partition& nu, long lambda1, int n);

/// Entrywise w_i - w_n for i < n. Requires w dominant.
std::vector<long> sl_weight(const GLWeight& w);

/// Expand the template at rank n (zero block of length n - |prefix| - |suffix|).
/// Throws invalid_input when n is too small or the result is not dominant.
GLWeight instantiate(const WeightTemplate& t, int n);

/// Inverse of instantiate for weights with at least one interior zero:
/// prefix = positive entries, suffix = negative entries. Weights without
/// an interior zero are ambiguous and yield nullopt.
std::optional<WeightTemplate> match_template(const GLWeight& w);

/// All partitions of k in decreasing lexicographic order ([k] first).
std::vector<Partition> partitions_of(long k);

} // namespace symcube
