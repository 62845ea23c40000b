#pragma once

#include <array>
#include <optional>
#include <vector>

#include "symcube/glcube.hpp"
#include "symcube/linalg.hpp"
#include "symcube/numeric.hpp"

namespace symcube {

/// Monomial of a cubic form: the three variable indices (0-based, sorted
/// ascending; repeats encode exponents).
using CubicMonomial = std::array<int, 3>;

CubicMonomial cubic_monomial(int a, int b, int c);

/// Homogeneous cubic over the Gaussian rationals in m variables.
struct CubicForm {
    int m = 0;
    std::map<CubicMonomial, Gaussian> terms;

    explicit CubicForm(int m_ = 0) : m(m_) {}

    bool is_zero() const { return terms.empty(); }
    void add(const CubicMonomial& mono, const Gaussian& c);

    friend bool operator==(const CubicForm&, const CubicForm&) = default;

    std::string to_string() const;  // "x0*x1*x2 - x0*x3*x4" style
};

/// Rank certificate: f = sum_j coeff_j * (form_j)^3 with rational-Gaussian
/// data; a verified certificate witnesses Waring rank <= size().
struct WaringCertificate {
    struct Term {
        Gaussian coeff;
        std::vector<Gaussian> form;  // length m
    };
    int m = 0;
    std::vector<Term> terms;

    std::size_t size() const { return terms.size(); }
};

/// Border-rank certificate: same shape with Laurent-polynomial entries in
/// a formal parameter. Verified when the expansion has no negative-degree
/// part and its degree-0 part is the target.
struct EpsilonFamily {
    struct Term {
        Laurent coeff;
        std::vector<Laurent> form;  // length m
    };
    int m = 0;
    std::vector<Term> terms;

    std::size_t size() const { return terms.size(); }
};

/// Substitute variable v by the linear form in row v of M (exact; M must
/// be invertible, checked by determinant).
CubicForm change_of_basis(const CubicForm& f, const DenseMatrix<Gaussian>& M);

/// Rank of the span of the m first partial derivatives of f (quadrics),
/// over the Gaussian rationals; lower-bounds border Waring rank.
long catalecticant_rank(const CubicForm& f);

/// Full expansion sum_j coeff_j * form_j^3 of a certificate.
CubicForm expand_certificate(const WaringCertificate& c);

bool verify_waring_certificate(const CubicForm& f, const WaringCertificate& c);

/// First monomial where the certificate expansion differs from f, as
/// (monomial, expected, actual); nullopt when the certificate verifies.
struct CertificateMismatch {
    std::string where;     // "e^-2 coefficient of x0*x1*x2" / "x0*x1*x2"
    std::string expected;
    std::string actual;
};
std::optional<CertificateMismatch> waring_certificate_mismatch(const CubicForm& f,
                                                               const WaringCertificate& c);

bool verify_border_certificate(const CubicForm& f, const EpsilonFamily& fam);
std::optional<CertificateMismatch> border_certificate_mismatch(const CubicForm& f,
                                                               const EpsilonFamily& fam);

/// Certificate for a single degree-3 monomial with unit coefficient:
/// size 1 for x^3, 3 for x^2 y, 4 for x y z.
WaringCertificate monomial_certificate(int m, const CubicMonomial& mono);

/// Certificate for coeff * l1 * l2 * l3 with arbitrary linear forms, via
/// the same three expansion identities (at most 4 cubes). The identities
/// are polynomial identities, so no independence of the forms is needed.
std::vector<WaringCertificate::Term> product_certificate(
    const Gaussian& coeff, const std::array<std::vector<Gaussian>, 3>& forms);

/// A cubic in the n^2 matrix-entry variables (variable (i,j) at index
/// (i-1)*n + (j-1)) with the same coefficients as p.
CubicForm cubic_from_glcube(const GlCubePolynomial& p);

/// Waring certificate for a catalog highest-weight vector (or a scalar
/// multiple of one), built from its term structure: at most 4 cubes per
/// catalog term, hence at most 4n^2 in total. The cyclic invariant row is
/// refused with excluded_input. Non-catalog inputs fall back to
/// per-monomial certificates (correct, but without the size guarantee).
WaringCertificate hwv_certificate(const GlCubePolynomial& p);

/// Coppersmith-Winograd cubics: cw_tensor(q) = x0 * sum_{i=1..q} x_i^2 in
/// q+1 variables; cw_tilde(q) adds x0^2 * x_{q+1} in q+2 variables.
CubicForm cw_tensor(int q);
CubicForm cw_tilde(int q);

/// The two distinguished cubics, in variable order x,y,z,w,t and x,y,z,t.
CubicForm f1();  // xyz - xwt, m = 5
CubicForm f2();  // xzt - x^2 y, m = 4

/// Change-of-basis matrices identifying f1 with cw_tensor(4) and f2 with
/// cw_tilde(2).
DenseMatrix<Gaussian> f1_substitution();
DenseMatrix<Gaussian> f2_substitution();

/// Bundled border families: 2 terms for x^2 y (m = 2), 4 terms for f2.
EpsilonFamily x2y_border_family();
EpsilonFamily f2_border_family();

} // namespace symcube
