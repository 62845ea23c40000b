#include "symcube/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symcube {

namespace {

std::string bracket_list(const std::vector<long>& v,
                         std::size_t star_after = std::string::npos) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (std::size_t i = 0; i <= v.size(); ++i) {
        if (i == star_after) {
            if (!first) os << ',';
            os << "0*";
            first = false;
        }
        if (i == v.size()) break;
        if (!first) os << ',';
        os << v[i];
        first = false;
    }
    os << ']';
    return os.str();
}

} // namespace

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw invalid_input("partition parts must be nonnegative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw invalid_input("partition parts must be weakly decreasing");
    }
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (part(i) < inner.part(i)) return false;
    return true;
}

std::string Partition::to_string() const { return bracket_list(parts_); }

GLWeight::GLWeight(int n_, std::vector<long> e) : n(n_), entries(std::move(e)) {
    if (n <= 0 || static_cast<int>(entries.size()) != n)
        throw invalid_input("GL weight needs exactly n entries");
}

bool GLWeight::is_dominant() const {
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] < entries[i + 1]) return false;
    return true;
}

bool GLWeight::is_zero_sum() const {
    return std::accumulate(entries.begin(), entries.end(), 0L) == 0;
}

std::string GLWeight::to_string() const { return bracket_list(entries); }

WeightTemplate::WeightTemplate(std::vector<long> p, std::vector<long> s)
    : prefix(std::move(p)), suffix(std::move(s)) {
    // canonical form: the 0* block absorbs boundary zeros
    while (!prefix.empty() && prefix.back() == 0) prefix.pop_back();
    std::reverse(suffix.begin(), suffix.end());
    while (!suffix.empty() && suffix.back() == 0) suffix.pop_back();
    std::reverse(suffix.begin(), suffix.end());
}

std::string WeightTemplate::to_string() const {
    std::vector<long> all = prefix;
    all.insert(all.end(), suffix.begin(), suffix.end());
    return bracket_list(all, prefix.size());
}

Partition conjugate(const Partition& p) {
    std::vector<long> cols;
    if (!p.empty()) {
        cols.resize(static_cast<std::size_t>(p.part(0)), 0);
        for (int i = 0; i < p.length(); ++i)
            for (long j = 0; j < p.part(i); ++j)
                ++cols[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(cols));
}

Partition dual_partition(const Partition& p, int n) {
    if (n <= 0) throw invalid_input("dual_partition: n must be positive");
    if (p.length() > n)
        throw invalid_input("dual_partition: partition longer than n");
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(n) - 1);
    for (int j = n - 1; j >= 1; --j)  // p_1 - p_n, p_1 - p_{n-1}, ..., p_1 - p_2
        out.push_back(p.part(0) - p.part(j));
    return Partition(std::move(out));
}

GLWeight gl_weight_of_component(const Partition& nu, long lambda1, int n) {
    if (nu.length() > n)
        throw invalid_input("gl_weight_of_component: partition longer than n");
    if (nu.size() != static_cast<long>(n) * lambda1)
        throw invalid_input("gl_weight_of_component: size(nu) != n*lambda1");
    std::vector<long> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = nu.part(i) - lambda1;
    return GLWeight(n, std::move(e));
}

std::vector<long> sl_weight(const GLWeight& w) {
    if (!w.is_dominant()) throw invalid_input("sl_weight: weight not dominant");
    std::vector<long> out(static_cast<std::size_t>(w.n - 1));
    for (int i = 0; i + 1 < w.n; ++i)
        out[static_cast<std::size_t>(i)] = w.entries[static_cast<std::size_t>(i)] - w.entries.back();
    return out;
}

GLWeight instantiate(const WeightTemplate& t, int n) {
    std::size_t fixed = t.prefix.size() + t.suffix.size();
    if (static_cast<std::size_t>(n) < fixed)
        throw invalid_input("instantiate: n smaller than template " + t.to_string());
    std::vector<long> e = t.prefix;
    e.resize(static_cast<std::size_t>(n) - t.suffix.size(), 0);
    e.insert(e.end(), t.suffix.begin(), t.suffix.end());
    GLWeight w(n, std::move(e));
    if (!w.is_dominant())
        throw invalid_input("instantiate: template " + t.to_string() + " is not dominant at n=" + std::to_string(n));
    return w;
}

std::optional<WeightTemplate> match_template(const GLWeight& w) {
    if (!w.is_dominant()) return std::nullopt;
    std::vector<long> pre, suf;
    bool has_zero = false;
    for (long v : w.entries) {
        if (v > 0) pre.push_back(v);
        else if (v < 0) suf.push_back(v);
        else has_zero = true;
    }
    if (!has_zero) return std::nullopt;  // no interior zero: ambiguous
    return WeightTemplate(std::move(pre), std::move(suf));
}

std::vector<Partition> partitions_of(long k) {
    if (k < 0) throw invalid_input("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k == 0 ? 1 : k);
    return out;
}

} // namespace symcube
