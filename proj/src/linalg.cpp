#include "symcube/linalg.hpp"

namespace symcube {

namespace {

void normalize_content(SparseIntRow& row) {
    Int g = 0;
    for (const auto& [c, v] : row) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
    if (!row.empty() && row.begin()->second < 0)
        for (auto& [c, v] : row) v = -v;
}

} // namespace

long sparse_int_rank(std::vector<SparseIntRow> rows) {
    std::map<int, SparseIntRow> pivots;  // leading column -> reduced row
    for (SparseIntRow& row : rows) {
        std::erase_if(row, [](const auto& e) { return e.second == 0; });
        while (!row.empty()) {
            int lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) break;
            const SparseIntRow& p = it->second;
            Int a = p.begin()->second;
            Int b = row.begin()->second;
            Int g = boost::multiprecision::gcd(a, b);
            Int row_scale = a / g;
            Int piv_scale = b / g;
            for (auto& [c, v] : row) v *= row_scale;
            for (const auto& [c, v] : p) {
                auto jt = row.find(c);
                if (jt == row.end()) {
                    row.emplace(c, -piv_scale * v);
                } else {
                    jt->second -= piv_scale * v;
                    if (jt->second == 0) row.erase(jt);
                }
            }
            normalize_content(row);
        }
        if (!row.empty()) {
            normalize_content(row);
            pivots.emplace(row.begin()->first, std::move(row));
        }
    }
    return static_cast<long>(pivots.size());
}

} // namespace symcube
