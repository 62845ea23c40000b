#include "symcube/glcube.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symcube/linalg.hpp"

namespace symcube {

namespace {

std::uint64_t pack_pair(int i, int j) {
    return static_cast<std::uint64_t>((i << 8) | j);
}

} // namespace

GlMonomial::GlMonomial(std::array<std::pair<int, int>, 3> pairs) {
    std::array<std::uint64_t, 3> codes;
    for (int t = 0; t < 3; ++t) {
        auto [i, j] = pairs[static_cast<std::size_t>(t)];
        if (i < 1 || i > 255 || j < 1 || j > 255)
            throw invalid_input("matrix unit index out of range");
        codes[static_cast<std::size_t>(t)] = pack_pair(i, j);
    }
    std::sort(codes.begin(), codes.end());
    key = (codes[0] << 32) | (codes[1] << 16) | codes[2];
}

std::array<std::pair<int, int>, 3> GlMonomial::pairs() const {
    std::array<std::pair<int, int>, 3> out;
    for (int t = 0; t < 3; ++t) {
        std::uint64_t code = (key >> (16 * (2 - t))) & 0xffff;
        out[static_cast<std::size_t>(t)] = {static_cast<int>(code >> 8),
                                            static_cast<int>(code & 0xff)};
    }
    return out;
}

std::string GlMonomial::to_string() const {
    std::ostringstream os;
    for (auto [i, j] : pairs()) os << "E[" << i << "," << j << "]";
    return os.str();
}

void GlCubePolynomial::add(const GlMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

GlCubePolynomial& GlCubePolynomial::operator+=(const GlCubePolynomial& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
}

GlCubePolynomial& GlCubePolynomial::operator-=(const GlCubePolynomial& o) {
    for (const auto& [m, c] : o.terms) add(m, -c);
    return *this;
}

GlCubePolynomial GlCubePolynomial::operator*(const Rat& c) const {
    GlCubePolynomial out(n);
    if (c == 0) return out;
    for (const auto& [m, v] : terms) out.terms.emplace(m, v * c);
    return out;
}

std::string GlCubePolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << rat_to_string(c) << " * ";
        os << m.to_string();
    }
    return os.str();
}

std::vector<long> monomial_weight(const GlMonomial& m, int n) {
    std::vector<long> w(static_cast<std::size_t>(n), 0);
    for (auto [i, j] : m.pairs()) {
        if (i > n || j > n) throw invalid_input("monomial index exceeds n");
        ++w[static_cast<std::size_t>(i - 1)];
        --w[static_cast<std::size_t>(j - 1)];
    }
    return w;
}

std::optional<GLWeight> weight_of(const GlCubePolynomial& p) {
    if (p.is_zero()) throw invalid_input("weight_of: zero polynomial");
    std::optional<std::vector<long>> common;
    for (const auto& [m, c] : p.terms) {
        auto w = monomial_weight(m, p.n);
        if (!common) common = std::move(w);
        else if (*common != w) return std::nullopt;
    }
    return GLWeight(p.n, std::move(*common));
}

namespace detail {

GlCubePolynomial apply_unit(int a, int b, const GlCubePolynomial& p) {
    if (a < 1 || a > p.n || b < 1 || b > p.n)
        throw invalid_input("apply_unit: index out of range");
    GlCubePolynomial out(p.n);
    for (const auto& [m, c] : p.terms) {
        auto ps = m.pairs();
        for (int t = 0; t < 3; ++t) {
            auto [i, j] = ps[static_cast<std::size_t>(t)];
            if (b == i) {  // ad(E_{a,b}) E_{i,j} has the +E_{a,j} part
                auto q = ps;
                q[static_cast<std::size_t>(t)] = {a, j};
                out.add(GlMonomial(q), c);
            }
            if (j == a) {  // and the -E_{i,b} part
                auto q = ps;
                q[static_cast<std::size_t>(t)] = {i, b};
                out.add(GlMonomial(q), -c);
            }
        }
    }
    return out;
}

} // namespace detail

GlCubePolynomial apply_ad(int a, int b, const GlCubePolynomial& p) {
    if (a == b) throw invalid_input("apply_ad: only root vectors act here (a != b)");
    return detail::apply_unit(a, b, p);
}

bool is_highest_weight(const GlCubePolynomial& p) {
    if (!weight_of(p)) throw invalid_input("is_highest_weight: not a weight vector");
    for (int a = 1; a + 1 <= p.n; ++a)
        if (!apply_ad(a, a + 1, p).is_zero()) return false;
    return true;
}

namespace {

struct RowSpec {
    WeightTemplate weight;
    int min_n;
    const char* display;
    // appends the instantiated terms for rank n
    void (*emit)(int n, std::vector<CatalogTerm>& out);
};

void push(std::vector<CatalogTerm>& out, Rat c, CatalogForm f1, CatalogForm f2,
          CatalogForm f3) {
    out.push_back(CatalogTerm{std::move(c), {f1, f2, f3}});
}

using F = CatalogForm;

const RowSpec kRows[16] = {
    {WeightTemplate({}, {}), 2, "I I I",
     [](int, std::vector<CatalogTerm>& out) { push(out, 1, F::I(), F::I(), F::I()); }},
    {WeightTemplate({}, {}), 2, "sum_{i,j} I E[i,j] E[j,i]",
     [](int n, std::vector<CatalogTerm>& out) {
         for (int i = 1; i <= n; ++i)
             for (int j = 1; j <= n; ++j)
                 push(out, 1, F::I(), F::E(i, j), F::E(j, i));
     }},
    {WeightTemplate({}, {}), 2, "sum_{i,j,k} E[i,j] E[j,k] E[k,i]",
     [](int n, std::vector<CatalogTerm>& out) {
         for (int i = 1; i <= n; ++i)
             for (int j = 1; j <= n; ++j)
                 for (int k = 1; k <= n; ++k)
                     push(out, 1, F::E(i, j), F::E(j, k), F::E(k, i));
     }},
    {WeightTemplate({1}, {-1}), 2, "I I E[1,n]",
     [](int n, std::vector<CatalogTerm>& out) { push(out, 1, F::I(), F::I(), F::E(1, n)); }},
    {WeightTemplate({1}, {-1}), 2, "sum_i I E[1,i] E[i,n]",
     [](int n, std::vector<CatalogTerm>& out) {
         for (int i = 1; i <= n; ++i) push(out, 1, F::I(), F::E(1, i), F::E(i, n));
     }},
    {WeightTemplate({1}, {-1}), 2, "sum_{i,j} E[1,n] E[i,j] E[j,i]",
     [](int n, std::vector<CatalogTerm>& out) {
         for (int i = 1; i <= n; ++i)
             for (int j = 1; j <= n; ++j)
                 push(out, 1, F::E(1, n), F::E(i, j), F::E(j, i));
     }},
    {WeightTemplate({1}, {-1}), 2, "sum_{i,j} E[1,i] E[i,j] E[j,n]",
     [](int n, std::vector<CatalogTerm>& out) {
         for (int i = 1; i <= n; ++i)
             for (int j = 1; j <= n; ++j)
                 push(out, 1, F::E(1, i), F::E(i, j), F::E(j, n));
     }},
    {WeightTemplate({2}, {-2}), 2, "I E[1,n] E[1,n]",
     [](int n, std::vector<CatalogTerm>& out) { push(out, 1, F::I(), F::E(1, n), F::E(1, n)); }},
    {WeightTemplate({2}, {-2}), 2, "sum_i E[1,n] E[1,i] E[i,n]",
     [](int n, std::vector<CatalogTerm>& out) {
         for (int i = 1; i <= n; ++i) push(out, 1, F::E(1, n), F::E(1, i), F::E(i, n));
     }},
    {WeightTemplate({1, 1}, {-2}), 3,
     "sum_i (E[1,n] E[2,i] E[i,n] - E[2,n] E[1,i] E[i,n])",
     [](int n, std::vector<CatalogTerm>& out) {
         for (int i = 1; i <= n; ++i) {
             push(out, 1, F::E(1, n), F::E(2, i), F::E(i, n));
             push(out, -1, F::E(2, n), F::E(1, i), F::E(i, n));
         }
     }},
    {WeightTemplate({2}, {-1, -1}), 3,
     "sum_i (E[1,n] E[1,i] E[i,n-1] - E[1,n-1] E[1,i] E[i,n])",
     [](int n, std::vector<CatalogTerm>& out) {
         for (int i = 1; i <= n; ++i) {
             push(out, 1, F::E(1, n), F::E(1, i), F::E(i, n - 1));
             push(out, -1, F::E(1, n - 1), F::E(1, i), F::E(i, n));
         }
     }},
    {WeightTemplate({1, 1}, {-1, -1}), 4, "I E[1,n] E[2,n-1] - I E[1,n-1] E[2,n]",
     [](int n, std::vector<CatalogTerm>& out) {
         push(out, 1, F::I(), F::E(1, n), F::E(2, n - 1));
         push(out, -1, F::I(), F::E(1, n - 1), F::E(2, n));
     }},
    {WeightTemplate({1, 1}, {-1, -1}), 4,
     "sum_i (E[1,n] E[2,i] E[i,n-1] - E[2,n] E[1,i] E[i,n-1] - E[1,n-1] E[2,i] E[i,n] "
     "+ E[2,n-1] E[1,i] E[i,n])",
     [](int n, std::vector<CatalogTerm>& out) {
         for (int i = 1; i <= n; ++i) {
             push(out, 1, F::E(1, n), F::E(2, i), F::E(i, n - 1));
             push(out, -1, F::E(2, n), F::E(1, i), F::E(i, n - 1));
             push(out, -1, F::E(1, n - 1), F::E(2, i), F::E(i, n));
             push(out, 1, F::E(2, n - 1), F::E(1, i), F::E(i, n));
         }
     }},
    {WeightTemplate({3}, {-3}), 2, "E[1,n] E[1,n] E[1,n]",
     [](int n, std::vector<CatalogTerm>& out) {
         push(out, 1, F::E(1, n), F::E(1, n), F::E(1, n));
     }},
    {WeightTemplate({2, 1}, {-1, -2}), 4, "E[1,n] E[1,n-1] E[2,n] - E[1,n] E[1,n] E[2,n-1]",
     [](int n, std::vector<CatalogTerm>& out) {
         push(out, 1, F::E(1, n), F::E(1, n - 1), F::E(2, n));
         push(out, -1, F::E(1, n), F::E(1, n), F::E(2, n - 1));
     }},
    {WeightTemplate({1, 1, 1}, {-1, -1, -1}), 6,
     "sum_{s in S_3} sgn(s) E[s(1),n] E[s(2),n-1] E[s(3),n-2]",
     [](int n, std::vector<CatalogTerm>& out) {
         const int perms[6][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2},
                                  {2, 1, 3}, {1, 3, 2}, {3, 2, 1}};
         for (int s = 0; s < 6; ++s)
             push(out, s < 3 ? 1 : -1, F::E(perms[s][0], n), F::E(perms[s][1], n - 1),
                  F::E(perms[s][2], n - 2));
     }},
};

} // namespace

int catalog_size() { return 16; }

const CatalogRow& catalog_row(int id) {
    if (id < 1 || id > 16) throw invalid_input("catalog row id must be in 1..16");
    static const std::vector<CatalogRow> rows = [] {
        std::vector<CatalogRow> out;
        for (int r = 0; r < 16; ++r)
            out.push_back(CatalogRow{r + 1, kRows[r].weight, kRows[r].min_n,
                                     kRows[r].display});
        return out;
    }();
    return rows[static_cast<std::size_t>(id - 1)];
}

int cyclic_invariant_row() { return 3; }

std::vector<CatalogTerm> catalog_terms(int id, int n) {
    const CatalogRow& row = catalog_row(id);
    if (n < row.min_n)
        throw invalid_input("catalog row " + std::to_string(id) + " requires n >= " +
                            std::to_string(row.min_n));
    std::vector<CatalogTerm> out;
    kRows[id - 1].emit(n, out);
    return out;
}

GlCubePolynomial catalog_vector(int id, int n) {
    std::vector<CatalogTerm> terms = catalog_terms(id, n);
    GlCubePolynomial p(n);
    // expand each product of three linear factors; I = sum_i E_{i,i}
    for (const CatalogTerm& term : terms) {
        std::array<std::vector<std::pair<int, int>>, 3> choices;
        for (int t = 0; t < 3; ++t) {
            const CatalogForm& f = term.forms[static_cast<std::size_t>(t)];
            if (f.identity)
                for (int i = 1; i <= n; ++i)
                    choices[static_cast<std::size_t>(t)].push_back({i, i});
            else
                choices[static_cast<std::size_t>(t)].push_back({f.i, f.j});
        }
        for (auto p1 : choices[0])
            for (auto p2 : choices[1])
                for (auto p3 : choices[2])
                    p.add(GlMonomial({p1, p2, p3}), term.coeff);
    }
    if (p.is_zero()) throw internal_error("catalog row expanded to zero");
    return p;
}

std::vector<GlMonomial> weight_space_basis(int n, const GLWeight& mu) {
    if (mu.n != n) throw invalid_input("weight_space_basis: weight has wrong rank");
    std::vector<GlMonomial> out;
    if (!mu.is_zero_sum()) return out;

    // positive part of mu bounds total row-index usage; enumerate sorted
    // triples of pair codes directly
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) all.push_back({i, j});
    std::size_t np = all.size();
    for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = a; b < np; ++b)
            for (std::size_t c = b; c < np; ++c) {
                GlMonomial m({all[a], all[b], all[c]});
                if (monomial_weight(m, n) == mu.entries) out.push_back(m);
            }
    return out;
}

long hwv_space_dim(int n, const GLWeight& mu) {
    if (!mu.is_dominant() || !mu.is_zero_sum())
        throw invalid_input("hwv_space_dim: weight must be dominant and zero-sum");
    std::vector<GlMonomial> basis = weight_space_basis(n, mu);
    if (basis.empty()) return 0;
    std::map<GlMonomial, int> index;
    for (std::size_t t = 0; t < basis.size(); ++t)
        index.emplace(basis[t], static_cast<int>(t));

    // stack the matrices of all simple raising operators; kernel dimension
    // is |basis| - rank. Rows are indexed by (a, image monomial).
    std::vector<SparseIntRow> rows;
    for (int a = 1; a + 1 <= n; ++a) {
        std::map<GlMonomial, SparseIntRow> image_rows;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            GlCubePolynomial mono(n);
            mono.add(basis[t], 1);
            GlCubePolynomial img = detail::apply_unit(a, a + 1, mono);
            for (const auto& [m, c] : img.terms) {
                if (boost::multiprecision::denominator(c) != 1)
                    throw internal_error("raising operator left the integer lattice");
                image_rows[m][static_cast<int>(t)] = boost::multiprecision::numerator(c);
            }
        }
        for (auto& [m, row] : image_rows) rows.push_back(std::move(row));
    }
    long rank = sparse_int_rank(std::move(rows));
    return static_cast<long>(basis.size()) - rank;
}

bool linear_independence(const std::vector<GlCubePolynomial>& vs) {
    if (vs.empty()) return true;
    int n = vs.front().n;
    for (const auto& v : vs)
        if (v.n != n) throw invalid_input("linear_independence: mixed ranks");

    std::map<GlMonomial, int> columns;
    for (const auto& v : vs)
        for (const auto& [m, c] : v.terms)
            columns.emplace(m, 0);
    int next = 0;
    for (auto& [m, idx] : columns) idx = next++;

    std::vector<SparseIntRow> rows;
    for (const auto& v : vs) {
        if (v.is_zero()) return false;
        Int lcm_den = 1;
        for (const auto& [m, c] : v.terms)
            lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
        SparseIntRow row;
        for (const auto& [m, c] : v.terms)
            row[columns[m]] = boost::multiprecision::numerator(c) *
                              (lcm_den / boost::multiprecision::denominator(c));
        rows.push_back(std::move(row));
    }
    return sparse_int_rank(std::move(rows)) == static_cast<long>(vs.size());
}

} // namespace symcube
