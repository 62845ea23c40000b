#pragma once

#include <cstdint>
#include <map>

#include "symcube/numeric.hpp"
#include "symcube/partition.hpp"

namespace symcube {

/// Symmetric polynomial in at most 8 variables with big-integer
/// coefficients. Exponent vectors are packed into a uint64 with variable 0
/// in the most significant byte, so numeric key order is lexicographic
/// order on exponents and the leading monomial is the map's last key.
/// Oracle-only type: correctness matters, generality does not.
class SymmetricPolynomial {
public:
    static constexpr int kMaxVars = 8;

    SymmetricPolynomial() = default;
    explicit SymmetricPolynomial(int m) : m_(m) {
        if (m < 1 || m > kMaxVars)
            throw invalid_input("SymmetricPolynomial supports 1..8 variables");
    }

    int vars() const { return m_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::uint64_t, Int>& terms() const { return coeffs_; }

    static std::uint64_t pack(const std::vector<int>& exps);
    static std::vector<int> unpack(std::uint64_t key, int m);

    void add_term(std::uint64_t key, const Int& c);
    Int coefficient(std::uint64_t key) const;

    /// Largest exponent vector in lexicographic order; requires nonzero.
    std::uint64_t leading_key() const;

    friend bool operator==(const SymmetricPolynomial&, const SymmetricPolynomial&) = default;

    SymmetricPolynomial& operator+=(const SymmetricPolynomial& o);
    SymmetricPolynomial& operator-=(const SymmetricPolynomial& o);
    friend SymmetricPolynomial operator*(const SymmetricPolynomial& a,
                                         const SymmetricPolynomial& b);

    /// Spot check of symmetry: swapping adjacent variables fixes the
    /// polynomial. Used by tests, cheap enough to call on oracle outputs.
    bool is_symmetric_under_swap(int v) const;

private:
    int m_ = 1;
    std::map<std::uint64_t, Int> coeffs_;
};

/// Complete homogeneous symmetric polynomial h_k in m variables (h_0 = 1).
SymmetricPolynomial complete_homogeneous(int k, int m);

/// Schur polynomial s_p(x_1..x_m) via the Jacobi-Trudi determinant
/// det(h_{p_i - i + j}). Zero when length(p) > m.
SymmetricPolynomial schur_polynomial(const Partition& p, int m);

/// Independent expansion of s_lambda * s_mu into Schur polynomials by
/// repeated subtraction of the lexicographically leading term. Valid when
/// all partitions involved have length <= m, i.e. m >= length bound of
/// interest; entries with longer shapes are invisible in m variables.
std::map<Partition, long> schur_product_oracle(const Partition& lambda,
                                               const Partition& mu, int m);

} // namespace symcube
