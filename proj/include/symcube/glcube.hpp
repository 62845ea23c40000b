#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symcube/numeric.hpp"
#include "symcube/partition.hpp"

namespace symcube {

/// Degree-3 monomial in matrix units: a sorted multiset of three index
/// pairs (i,j) with 1 <= i,j <= n <= 255, packed into a uint64 (each pair
/// is a 16-bit code i<<8|j; codes stored ascending).
struct GlMonomial {
    std::uint64_t key = 0;

    GlMonomial() = default;
    GlMonomial(std::array<std::pair<int, int>, 3> pairs);

    std::array<std::pair<int, int>, 3> pairs() const;

    friend auto operator<=>(const GlMonomial&, const GlMonomial&) = default;

    std::string to_string() const;  // "E[1,2]E[2,3]E[3,1]"
};

/// Element of S^3(gl_n): sparse rational combination of GlMonomials.
struct GlCubePolynomial {
    int n = 0;
    std::map<GlMonomial, Rat> terms;

    explicit GlCubePolynomial(int n_ = 0) : n(n_) {}

    bool is_zero() const { return terms.empty(); }
    void add(const GlMonomial& m, const Rat& c);

    friend bool operator==(const GlCubePolynomial&, const GlCubePolynomial&) = default;

    GlCubePolynomial& operator+=(const GlCubePolynomial& o);
    GlCubePolynomial& operator-=(const GlCubePolynomial& o);
    GlCubePolynomial operator*(const Rat& c) const;

    std::string to_string() const;
};

/// Weight of a monomial: +e_i for every row index, -e_j for every column
/// index, as a length-n integer vector.
std::vector<long> monomial_weight(const GlMonomial& m, int n);

/// Common weight of all monomials of p, or nullopt when p is not
/// homogeneous. Throws invalid_input on the zero polynomial.
std::optional<GLWeight> weight_of(const GlCubePolynomial& p);

/// Adjoint action of the root vector E_{a,b} (a != b) extended to S^3 by
/// the Leibniz rule: on gl_n, ad(E_{a,b}) E_{i,j} = [b==i] E_{a,j} - [j==a] E_{i,b}.
GlCubePolynomial apply_ad(int a, int b, const GlCubePolynomial& p);

/// True iff every simple raising operator E_{a,a+1} kills p. Requires a
/// nonzero weight vector.
bool is_highest_weight(const GlCubePolynomial& p);

namespace detail {
/// Action of an arbitrary matrix unit E_{a,b}, a == b allowed (Cartan
/// elements act diagonally). apply_ad delegates here after its guard.
GlCubePolynomial apply_unit(int a, int b, const GlCubePolynomial& p);
} // namespace detail

/// One linear expression in matrix units as used by the built-in catalog:
/// either the identity element I = sum_i E_{i,i} or a single unit E_{i,j}.
struct CatalogForm {
    bool identity = false;
    int i = 0, j = 0;

    static CatalogForm I() { return CatalogForm{true, 0, 0}; }
    static CatalogForm E(int i, int j) { return CatalogForm{false, i, j}; }

    friend bool operator==(const CatalogForm&, const CatalogForm&) = default;
};

/// Product of three catalog forms with a rational coefficient. Summation
/// indices of a catalog row are already expanded to concrete terms.
struct CatalogTerm {
    Rat coeff;
    std::array<CatalogForm, 3> forms;
};

/// One row of the built-in catalog of highest-weight vectors of S^3(gl_n).
struct CatalogRow {
    int id = 0;                 // 1..16
    WeightTemplate weight;      // weight pattern of the row
    int min_n = 2;              // smallest n keeping distinguished indices distinct
    std::string display;        // human-readable formula
};

int catalog_size();                       // 16
const CatalogRow& catalog_row(int id);    // throws invalid_input outside 1..16
int cyclic_invariant_row();               // the sum_{i,j,k} E_{i,j}E_{j,k}E_{k,i} row

/// The row's terms at concrete n (summations expanded, I left symbolic).
/// Throws invalid_input when n < min_n of the row.
std::vector<CatalogTerm> catalog_terms(int id, int n);

/// The fully expanded polynomial of a catalog row at rank n.
GlCubePolynomial catalog_vector(int id, int n);

/// All degree-3 monomials of the given weight, in key order.
/// Non-zero-sum weights have empty weight spaces.
std::vector<GlMonomial> weight_space_basis(int n, const GLWeight& mu);

/// Multiplicity of the irreducible with highest weight mu in S^3(gl_n):
/// the dimension of the joint kernel of all simple raising operators on
/// the mu-weight space, by exact integer elimination. Requires mu
/// dominant and zero-sum.
long hwv_space_dim(int n, const GLWeight& mu);

/// Exact-rank test over the union of occurring monomials; all inputs must
/// share the same n.
bool linear_independence(const std::vector<GlCubePolynomial>& vs);

} // namespace symcube
