#include "symcube/schur.hpp"

#include <bit>
#include <mutex>

namespace symcube {

std::uint64_t SymmetricPolynomial::pack(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars)
        throw invalid_input("exponent vector longer than 8");
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] < 0 || exps[v] > 255)
            throw invalid_input("exponent out of packing range");
        key |= static_cast<std::uint64_t>(exps[v]) << (8 * (7 - v));
    }
    return key;
}

std::vector<int> SymmetricPolynomial::unpack(std::uint64_t key, int m) {
    std::vector<int> exps(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v)
        exps[static_cast<std::size_t>(v)] =
            static_cast<int>((key >> (8 * (7 - v))) & 0xff);
    return exps;
}

void SymmetricPolynomial::add_term(std::uint64_t key, const Int& c) {
    if (c == 0) return;
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Int SymmetricPolynomial::coefficient(std::uint64_t key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Int(0) : it->second;
}

std::uint64_t SymmetricPolynomial::leading_key() const {
    if (coeffs_.empty()) throw invalid_input("leading_key of zero polynomial");
    return coeffs_.rbegin()->first;
}

SymmetricPolynomial& SymmetricPolynomial::operator+=(const SymmetricPolynomial& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
}

SymmetricPolynomial& SymmetricPolynomial::operator-=(const SymmetricPolynomial& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
    return *this;
}

SymmetricPolynomial operator*(const SymmetricPolynomial& a, const SymmetricPolynomial& b) {
    SymmetricPolynomial r(std::max(a.m_, b.m_));
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_)
            r.add_term(ka + kb, ca * cb);  // per-byte sums stay < 256 at desk scale
    return r;
}

bool SymmetricPolynomial::is_symmetric_under_swap(int v) const {
    if (v < 0 || v + 1 >= m_) throw invalid_input("swap index out of range");
    for (const auto& [k, c] : coeffs_) {
        auto e = unpack(k, m_);
        std::swap(e[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v) + 1]);
        if (coefficient(pack(e)) != c) return false;
    }
    return true;
}

SymmetricPolynomial complete_homogeneous(int k, int m) {
    if (m < 1 || m > SymmetricPolynomial::kMaxVars)
        throw invalid_input("complete_homogeneous: bad variable count");
    static std::map<std::pair<int, int>, SymmetricPolynomial> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({k, m});
        if (it != cache.end()) return it->second;
    }
    SymmetricPolynomial h(m);
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int v, int remaining) -> void {
        if (v == m - 1) {
            exps[static_cast<std::size_t>(v)] = remaining;
            h.add_term(SymmetricPolynomial::pack(exps), 1);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(v)] = e;
            self(self, v + 1, remaining - e);
        }
    };
    if (k >= 0) rec(rec, 0, k);  // negative k: empty sum, zero polynomial
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::make_pair(k, m), std::move(h)).first->second;
}

SymmetricPolynomial schur_polynomial(const Partition& p, int m) {
    if (p.length() > m) return SymmetricPolynomial(m);  // Schur functor vanishes
    int l = std::max(p.length(), 1);
    // det(h_{p_i - i + j}) over i,j in 1..l by Laplace expansion along the
    // top remaining row, with minors memoized on the used-column mask.
    // Trailing rows have small h-degrees, so shared minors stay small and
    // the 2^l states beat the l! permutation walk by a wide margin.
    std::map<unsigned, SymmetricPolynomial> minors;
    auto minor = [&](auto&& self, unsigned mask) -> const SymmetricPolynomial& {
        if (auto it = minors.find(mask); it != minors.end()) return it->second;
        int i = std::popcount(mask);  // rows 0..i-1 already expanded
        SymmetricPolynomial det(m);
        if (i == l) {
            det.add_term(0, 1);  // empty minor
        } else {
            int pos = 0;  // position of j among the remaining columns
            for (int j = 0; j < l; ++j) {
                if (mask & (1u << j)) continue;
                int deg = static_cast<int>(p.part(i)) - (i + 1) + (j + 1);
                if (deg >= 0) {
                    SymmetricPolynomial prod =
                        complete_homogeneous(deg, m) * self(self, mask | (1u << j));
                    if (pos % 2 == 0)
                        det += prod;
                    else
                        det -= prod;
                }
                ++pos;
            }
        }
        return minors.emplace(mask, std::move(det)).first->second;
    };
    return minor(minor, 0);
}

std::map<Partition, long> schur_product_oracle(const Partition& lambda,
                                               const Partition& mu, int m) {
    SymmetricPolynomial prod = schur_polynomial(lambda, m) * schur_polynomial(mu, m);
    std::map<Partition, long> out;
    while (!prod.is_zero()) {
        auto exps = SymmetricPolynomial::unpack(prod.leading_key(), m);
        std::vector<long> parts(exps.begin(), exps.end());
        Partition lead(std::move(parts));  // leading exponent of a symmetric
                                           // polynomial is weakly decreasing
        Int c = prod.coefficient(prod.leading_key());
        if (c <= 0) throw internal_error("oracle: non-positive leading coefficient");
        SymmetricPolynomial s = schur_polynomial(lead, m);
        for (const auto& [k, sc] : s.terms()) prod.add_term(k, -c * sc);
        out[lead] += c.convert_to<long>();
    }
    return out;
}

} // namespace symcube
