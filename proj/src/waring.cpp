#include "symcube/waring.hpp"

#include <algorithm>
#include <sstream>

namespace symcube {

CubicMonomial cubic_monomial(int a, int b, int c) {
    CubicMonomial m{a, b, c};
    std::sort(m.begin(), m.end());
    return m;
}

namespace {

std::string monomial_name(const CubicMonomial& mono) {
    std::ostringstream os;
    for (std::size_t t = 0; t < 3;) {
        std::size_t run = t;
        while (run < 3 && mono[run] == mono[t]) ++run;
        if (t > 0) os << "*";
        os << "x" << mono[t];
        if (run - t > 1) os << "^" << (run - t);
        t = run;
    }
    return os.str();
}

// multinomial weight of picking indices (i <= j <= k) out of a cubed sum
Gaussian triple_multiplicity(std::size_t i, std::size_t j, std::size_t k) {
    if (i == j && j == k) return Gaussian(1);
    if (i == j || j == k) return Gaussian(3);
    return Gaussian(6);
}

} // namespace

void CubicForm::add(const CubicMonomial& mono, const Gaussian& c) {
    if (c.is_zero()) return;
    for (int v : mono)
        if (v < 0 || v >= m) throw invalid_input("cubic monomial variable out of range");
    auto it = terms.find(mono);
    if (it == terms.end()) {
        terms.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

std::string CubicForm::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string cs = gaussian_to_string(c);
        if (cs != "1") os << "(" << cs << ")*";
        os << monomial_name(mono);
    }
    return os.str();
}

CubicForm change_of_basis(const CubicForm& f, const DenseMatrix<Gaussian>& M) {
    if (M.height() != static_cast<std::size_t>(f.m) || M.width() != M.height())
        throw invalid_input("change_of_basis: matrix must be m x m");
    if (dense_det(M).is_zero())
        throw invalid_input("change_of_basis: matrix is singular");
    CubicForm out(f.m);
    for (const auto& [mono, c] : f.terms) {
        // product of the three substituted linear forms
        const auto& r0 = M.rows[static_cast<std::size_t>(mono[0])];
        const auto& r1 = M.rows[static_cast<std::size_t>(mono[1])];
        const auto& r2 = M.rows[static_cast<std::size_t>(mono[2])];
        for (std::size_t a = 0; a < r0.size(); ++a) {
            if (r0[a].is_zero()) continue;
            for (std::size_t b = 0; b < r1.size(); ++b) {
                if (r1[b].is_zero()) continue;
                Gaussian ab = r0[a] * r1[b];
                for (std::size_t d = 0; d < r2.size(); ++d) {
                    if (r2[d].is_zero()) continue;
                    out.add(cubic_monomial(static_cast<int>(a), static_cast<int>(b),
                                           static_cast<int>(d)),
                            c * ab * r2[d]);
                }
            }
        }
    }
    return out;
}

long catalecticant_rank(const CubicForm& f) {
    // rows: partial derivatives; columns: degree-2 monomials (u <= w)
    std::map<std::pair<int, int>, std::size_t> col;
    auto col_of = [&](int u, int w) {
        if (u > w) std::swap(u, w);
        return col.emplace(std::make_pair(u, w), col.size()).first->second;
    };
    std::vector<std::map<std::size_t, Gaussian>> sparse(static_cast<std::size_t>(f.m));
    for (const auto& [mono, c] : f.terms)
        for (int t = 0; t < 3; ++t) {
            int v = mono[t];
            int u = mono[(t + 1) % 3], w = mono[(t + 2) % 3];
            sparse[static_cast<std::size_t>(v)][col_of(u, w)] += c;  // d/dv picks
            // each occurrence of v once; repeats accumulate to the exponent
        }
    DenseMatrix<Gaussian> mat;
    mat.rows.assign(static_cast<std::size_t>(f.m),
                    std::vector<Gaussian>(col.size(), Gaussian(0)));
    for (std::size_t r = 0; r < sparse.size(); ++r)
        for (const auto& [cidx, v] : sparse[r]) mat.rows[r][cidx] = v;
    return dense_rank(std::move(mat));
}

CubicForm expand_certificate(const WaringCertificate& c) {
    CubicForm out(c.m);
    for (const auto& term : c.terms) {
        if (static_cast<int>(term.form.size()) != c.m)
            throw invalid_input("certificate form has wrong length");
        std::vector<std::size_t> nz;
        for (std::size_t v = 0; v < term.form.size(); ++v)
            if (!term.form[v].is_zero()) nz.push_back(v);
        for (std::size_t a = 0; a < nz.size(); ++a)
            for (std::size_t b = a; b < nz.size(); ++b)
                for (std::size_t d = b; d < nz.size(); ++d) {
                    Gaussian coeff = term.coeff * triple_multiplicity(a, b, d) *
                                     term.form[nz[a]] * term.form[nz[b]] * term.form[nz[d]];
                    out.add(cubic_monomial(static_cast<int>(nz[a]), static_cast<int>(nz[b]),
                                           static_cast<int>(nz[d])),
                            coeff);
                }
    }
    return out;
}

bool verify_waring_certificate(const CubicForm& f, const WaringCertificate& c) {
    return !waring_certificate_mismatch(f, c).has_value();
}

std::optional<CertificateMismatch> waring_certificate_mismatch(const CubicForm& f,
                                                               const WaringCertificate& c) {
    if (f.m != c.m)
        return CertificateMismatch{"variable count", std::to_string(f.m), std::to_string(c.m)};
    CubicForm got = expand_certificate(c);
    std::map<CubicMonomial, std::pair<Gaussian, Gaussian>> joined;
    for (const auto& [mono, v] : f.terms) joined[mono].first = v;
    for (const auto& [mono, v] : got.terms) joined[mono].second = v;
    for (const auto& [mono, pair] : joined)
        if (!(pair.first == pair.second))
            return CertificateMismatch{monomial_name(mono), gaussian_to_string(pair.first),
                                       gaussian_to_string(pair.second)};
    return std::nullopt;
}

bool verify_border_certificate(const CubicForm& f, const EpsilonFamily& fam) {
    return !border_certificate_mismatch(f, fam).has_value();
}

std::optional<CertificateMismatch> border_certificate_mismatch(const CubicForm& f,
                                                               const EpsilonFamily& fam) {
    if (f.m != fam.m)
        return CertificateMismatch{"variable count", std::to_string(f.m),
                                   std::to_string(fam.m)};
    std::map<CubicMonomial, Laurent> expansion;
    for (const auto& term : fam.terms) {
        if (static_cast<int>(term.form.size()) != fam.m)
            throw invalid_input("family form has wrong length");
        std::vector<std::size_t> nz;
        for (std::size_t v = 0; v < term.form.size(); ++v)
            if (!term.form[v].is_zero()) nz.push_back(v);
        for (std::size_t a = 0; a < nz.size(); ++a)
            for (std::size_t b = a; b < nz.size(); ++b)
                for (std::size_t d = b; d < nz.size(); ++d) {
                    Laurent coeff = term.coeff * Laurent(triple_multiplicity(a, b, d)) *
                                    term.form[nz[a]] * term.form[nz[b]] * term.form[nz[d]];
                    if (coeff.is_zero()) continue;
                    expansion[cubic_monomial(static_cast<int>(nz[a]),
                                             static_cast<int>(nz[b]),
                                             static_cast<int>(nz[d]))] += coeff;
                }
    }
    // every monomial of f must appear so missing ones are caught too
    for (const auto& [mono, v] : f.terms) expansion[mono];
    for (const auto& [mono, series] : expansion) {
        if (!series.is_zero() && series.min_degree() < 0)
            return CertificateMismatch{
                "e^" + std::to_string(series.min_degree()) + " coefficient of " +
                    monomial_name(mono),
                "0", gaussian_to_string(series.coefficient(series.min_degree()))};
        auto it = f.terms.find(mono);
        Gaussian want = it == f.terms.end() ? Gaussian(0) : it->second;
        if (!(series.coefficient(0) == want))
            return CertificateMismatch{"e^0 coefficient of " + monomial_name(mono),
                                       gaussian_to_string(want),
                                       gaussian_to_string(series.coefficient(0))};
    }
    return std::nullopt;
}

namespace {

std::vector<Gaussian> form_add(const std::vector<Gaussian>& a, const std::vector<Gaussian>& b) {
    std::vector<Gaussian> out(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) out[v] = a[v] + b[v];
    return out;
}

std::vector<Gaussian> form_sub(const std::vector<Gaussian>& a, const std::vector<Gaussian>& b) {
    std::vector<Gaussian> out(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) out[v] = a[v] - b[v];
    return out;
}

} // namespace

std::vector<WaringCertificate::Term> product_certificate(
    const Gaussian& coeff, const std::array<std::vector<Gaussian>, 3>& forms) {
    std::vector<WaringCertificate::Term> out;
    if (coeff.is_zero()) return out;
    const auto& [l1, l2, l3] = forms;
    if (l1 == l2 && l2 == l3) {
        out.push_back({coeff, l1});
        return out;
    }
    const std::vector<Gaussian>* x = nullptr;
    const std::vector<Gaussian>* y = nullptr;
    if (l1 == l2) { x = &l1; y = &l3; }
    else if (l1 == l3) { x = &l1; y = &l2; }
    else if (l2 == l3) { x = &l2; y = &l1; }
    if (x) {
        // x^2 y = (1/6)(x+y)^3 - (1/6)(x-y)^3 - (1/3)y^3
        Gaussian sixth = coeff / Gaussian(6);
        out.push_back({sixth, form_add(*x, *y)});
        out.push_back({-sixth, form_sub(*x, *y)});
        out.push_back({-(coeff / Gaussian(3)), *y});
        return out;
    }
    // xyz = (1/24)((x+y+z)^3 - (x+y-z)^3 - (x-y+z)^3 + (x-y-z)^3)
    Gaussian q = coeff / Gaussian(24);
    out.push_back({q, form_add(form_add(l1, l2), l3)});
    out.push_back({-q, form_sub(form_add(l1, l2), l3)});
    out.push_back({-q, form_add(form_sub(l1, l2), l3)});
    out.push_back({q, form_sub(form_sub(l1, l2), l3)});
    return out;
}

WaringCertificate monomial_certificate(int m, const CubicMonomial& mono) {
    if (m < 1) throw invalid_input("monomial_certificate: need at least one variable");
    std::array<std::vector<Gaussian>, 3> forms;
    for (int t = 0; t < 3; ++t) {
        if (mono[t] < 0 || mono[t] >= m)
            throw invalid_input("monomial_certificate: variable out of range");
        forms[static_cast<std::size_t>(t)].assign(static_cast<std::size_t>(m), Gaussian(0));
        forms[static_cast<std::size_t>(t)][static_cast<std::size_t>(mono[t])] = Gaussian(1);
    }
    WaringCertificate cert;
    cert.m = m;
    cert.terms = product_certificate(Gaussian(1), forms);
    CubicForm target(m);
    target.add(mono, Gaussian(1));
    if (!verify_waring_certificate(target, cert))
        throw internal_error("monomial_certificate failed self-verification");
    return cert;
}

CubicForm cubic_from_glcube(const GlCubePolynomial& p) {
    CubicForm out(p.n * p.n);
    for (const auto& [mono, c] : p.terms) {
        auto ps = mono.pairs();
        out.add(cubic_monomial((ps[0].first - 1) * p.n + ps[0].second - 1,
                               (ps[1].first - 1) * p.n + ps[1].second - 1,
                               (ps[2].first - 1) * p.n + ps[2].second - 1),
                Gaussian(c));
    }
    return out;
}

WaringCertificate hwv_certificate(const GlCubePolynomial& p) {
    if (p.is_zero()) throw invalid_input("hwv_certificate: zero polynomial");
    int n = p.n;
    int m = n * n;

    // recognize the input as a scalar multiple of a catalog row
    int matched = 0;
    Rat scale = 0;
    for (int id = 1; id <= catalog_size() && !matched; ++id) {
        if (n < catalog_row(id).min_n) continue;
        GlCubePolynomial cand = catalog_vector(id, n);
        if (cand.terms.size() != p.terms.size()) continue;
        Rat s = p.terms.begin()->second / cand.terms.begin()->second;
        if (cand * s == p) {
            matched = id;
            scale = s;
        }
    }
    if (matched == cyclic_invariant_row())
        throw excluded_input(
            "hwv_certificate: the cyclic invariant sum_{i,j,k} E[i,j]E[j,k]E[k,i] is "
            "excluded from the quadratic-size certificate construction");

    auto unit_form = [&](int i, int j) {
        std::vector<Gaussian> f(static_cast<std::size_t>(m), Gaussian(0));
        f[static_cast<std::size_t>((i - 1) * n + j - 1)] = Gaussian(1);
        return f;
    };

    WaringCertificate cert;
    cert.m = m;
    if (matched) {
        std::vector<Gaussian> trace(static_cast<std::size_t>(m), Gaussian(0));
        for (int i = 1; i <= n; ++i)
            trace[static_cast<std::size_t>((i - 1) * n + i - 1)] = Gaussian(1);
        for (const CatalogTerm& term : catalog_terms(matched, n)) {
            std::array<std::vector<Gaussian>, 3> forms;
            for (int t = 0; t < 3; ++t) {
                const CatalogForm& f = term.forms[static_cast<std::size_t>(t)];
                forms[static_cast<std::size_t>(t)] =
                    f.identity ? trace : unit_form(f.i, f.j);
            }
            auto part = product_certificate(Gaussian(term.coeff * scale), forms);
            cert.terms.insert(cert.terms.end(), part.begin(), part.end());
        }
    } else {
        // general fallback: one small certificate per expanded monomial
        for (const auto& [mono, c] : p.terms) {
            auto ps = mono.pairs();
            std::array<std::vector<Gaussian>, 3> forms;
            for (int t = 0; t < 3; ++t)
                forms[static_cast<std::size_t>(t)] =
                    unit_form(ps[static_cast<std::size_t>(t)].first,
                              ps[static_cast<std::size_t>(t)].second);
            auto part = product_certificate(Gaussian(c), forms);
            cert.terms.insert(cert.terms.end(), part.begin(), part.end());
        }
    }
    if (!verify_waring_certificate(cubic_from_glcube(p), cert))
        throw internal_error("hwv_certificate failed self-verification");
    return cert;
}

CubicForm cw_tensor(int q) {
    if (q < 1) throw invalid_input("cw_tensor: q must be positive");
    CubicForm f(q + 1);
    for (int i = 1; i <= q; ++i) f.add(cubic_monomial(0, i, i), Gaussian(1));
    return f;
}

CubicForm cw_tilde(int q) {
    if (q < 1) throw invalid_input("cw_tilde: q must be positive");
    CubicForm f(q + 2);
    for (int i = 1; i <= q; ++i) f.add(cubic_monomial(0, i, i), Gaussian(1));
    f.add(cubic_monomial(0, 0, q + 1), Gaussian(1));
    return f;
}

CubicForm f1() {
    CubicForm f(5);  // variables x,y,z,w,t
    f.add(cubic_monomial(0, 1, 2), Gaussian(1));
    f.add(cubic_monomial(0, 3, 4), Gaussian(-1));
    return f;
}

CubicForm f2() {
    CubicForm f(4);  // variables x,y,z,t
    f.add(cubic_monomial(0, 2, 3), Gaussian(1));
    f.add(cubic_monomial(0, 0, 1), Gaussian(-1));
    return f;
}

DenseMatrix<Gaussian> f1_substitution() {
    Gaussian i = Gaussian::i();
    DenseMatrix<Gaussian> M;
    M.rows = {
        {Gaussian(1), Gaussian(0), Gaussian(0), Gaussian(0), Gaussian(0)},   // x = x0
        {Gaussian(0), Gaussian(1), i, Gaussian(0), Gaussian(0)},             // y = x1 + i x2
        {Gaussian(0), Gaussian(1), -i, Gaussian(0), Gaussian(0)},            // z = x1 - i x2
        {Gaussian(0), Gaussian(0), Gaussian(0), Gaussian(1), i},             // w = x3 + i x4
        {Gaussian(0), Gaussian(0), Gaussian(0), Gaussian(-1), i},            // t = -x3 + i x4
    };
    return M;
}

DenseMatrix<Gaussian> f2_substitution() {
    Gaussian i = Gaussian::i();
    DenseMatrix<Gaussian> M;
    M.rows = {
        {Gaussian(1), Gaussian(0), Gaussian(0), Gaussian(0)},   // x = x0
        {Gaussian(0), Gaussian(0), Gaussian(0), Gaussian(-1)},  // y = -x3
        {Gaussian(0), Gaussian(1), i, Gaussian(0)},             // z = x1 + i x2
        {Gaussian(0), Gaussian(1), -i, Gaussian(0)},            // t = x1 - i x2
    };
    return M;
}

EpsilonFamily x2y_border_family() {
    EpsilonFamily fam;
    fam.m = 2;
    Laurent third_over_eps = Laurent::monomial(-1, Gaussian(Rat(1, 3)));
    fam.terms.push_back({third_over_eps,
                         {Laurent(Gaussian(1)), Laurent::monomial(1, Gaussian(1))}});
    fam.terms.push_back({-third_over_eps, {Laurent(Gaussian(1)), Laurent()}});
    return fam;
}

EpsilonFamily f2_border_family() {
    // limit construction: two cubes produce x*z*t at order e^2, a third
    // cancels the e^-1 cross term and supplies -x^2*y, the last removes
    // the pure x^3 residue
    EpsilonFamily fam;
    fam.m = 4;
    Gaussian half(Rat(1, 2));
    Gaussian i = Gaussian::i();
    Laurent one(Gaussian(1));
    Laurent zero;
    Laurent c12 = Laurent::monomial(-2, Gaussian(Rat(1, 3)));
    fam.terms.push_back({c12,
                         {one, zero, Laurent::monomial(1, half), Laurent::monomial(1, half)}});
    fam.terms.push_back({c12,
                         {one, zero, Laurent::monomial(1, -(i * half)),
                          Laurent::monomial(1, i * half)}});
    fam.terms.push_back({Laurent::monomial(-3, Gaussian(Rat(-1, 3))),
                         {one, Laurent::monomial(3, Gaussian(1)),
                          Laurent::monomial(2, (Gaussian(1) - i) * half),
                          Laurent::monomial(2, (Gaussian(1) + i) * half)}});
    fam.terms.push_back({Laurent::monomial(-3, Gaussian(Rat(1, 3))) +
                             Laurent::monomial(-2, Gaussian(Rat(-2, 3))),
                         {one, zero, zero, zero}});
    return fam;
}

} // namespace symcube
