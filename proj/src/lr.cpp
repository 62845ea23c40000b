#include "symcube/lr.hpp"

#include <algorithm>

namespace symcube {

namespace {

// Counts LR fillings by backtracking over the skew cells in reverse
// reading order (row 1 rightmost first), which makes the lattice-word
// prefix condition checkable at every step.
class LrCounter {
public:
    LrCounter(const Partition& outer, const Partition& inner, const Partition& content)
        : outer_(outer), inner_(inner), content_(content),
          rows_(outer.length()), values_(static_cast<std::size_t>(content.length())) {
        grid_.resize(static_cast<std::size_t>(rows_));
        for (int r = 0; r < rows_; ++r)
            grid_[static_cast<std::size_t>(r)].assign(
                static_cast<std::size_t>(outer_.part(r)), 0);
        counts_.assign(values_.size(), 0);
    }

    long count() {
        total_ = 0;
        fill(0, outer_.part(0) - 1);
        return total_;
    }

private:
    void fill(int r, long c) {
        // advance past cells of the inner shape / exhausted rows
        while (r < rows_ && c < inner_.part(r)) {
            ++r;
            if (r < rows_) c = outer_.part(r) - 1;
        }
        if (r >= rows_) {
            ++total_;  // content bound + cell count force content == mu
            return;
        }
        int right = c + 1 < outer_.part(r)
                        ? grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]
                        : static_cast<int>(values_.size());
        int above = (r > 0 && c < outer_.part(r - 1) && c >= inner_.part(r - 1))
                        ? grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]
                        : 0;
        int max_v = std::min<int>(right, static_cast<int>(values_.size()));
        for (int v = above + 1; v <= max_v; ++v) {
            if (counts_[static_cast<std::size_t>(v - 1)] >= content_.part(v - 1)) continue;
            if (v > 1 && counts_[static_cast<std::size_t>(v - 1)] + 1 >
                             counts_[static_cast<std::size_t>(v - 2)])
                continue;  // lattice: every prefix has #v <= #(v-1)
            grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++counts_[static_cast<std::size_t>(v - 1)];
            fill(r, c - 1);
            --counts_[static_cast<std::size_t>(v - 1)];
        }
        grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    }

    const Partition& outer_;
    const Partition& inner_;
    const Partition& content_;
    int rows_;
    std::vector<int> values_;  // sized to length(content); entries unused
    std::vector<std::vector<int>> grid_;
    std::vector<long> counts_;
    long total_ = 0;
};

long lr_count_checked(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.empty()) return nu == lambda ? 1 : 0;
    return LrCounter(nu, lambda, mu).count();
}

} // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    if (!nu.contains(lambda)) return 0;
    // symmetry: enumerate with the smaller content (fewer fillings to visit)
    if (lambda.size() < mu.size() && nu.contains(mu))
        return lr_count_checked(mu, lambda, nu);
    return lr_count_checked(lambda, mu, nu);
}

std::map<Partition, long> lr_expand(const Partition& lambda, const Partition& mu,
                                    int max_length) {
    if (max_length <= 0) throw invalid_input("lr_expand: max_length must be positive");
    // product is symmetric; grow the larger factor by the smaller content
    const Partition& base = lambda.size() >= mu.size() ? lambda : mu;
    const Partition& content = lambda.size() >= mu.size() ? mu : lambda;

    std::map<Partition, long> out;
    if (base.length() > max_length) return out;

    long target = base.size() + content.size();
    std::vector<long> rows;
    auto enumerate = [&](auto&& self, int i, long prev, long remaining) -> void {
        if (remaining == 0) {
            std::vector<long> padded = rows;
            Partition nu(std::move(padded));
            long c = lr_count_checked(base, content, nu);
            if (c > 0) out[nu] += c;
            return;
        }
        if (i >= max_length) return;
        long lo = base.part(i);
        long hi = std::min(prev, base.part(i) + content.part(0));
        // lower bound on what later rows can still absorb
        for (long v = hi; v >= lo; --v) {
            if (v > remaining) continue;
            long rest_min = 0;
            for (int j = i + 1; j < base.length(); ++j) rest_min += base.part(j);
            if (remaining - v < rest_min) continue;
            if (remaining - v > (static_cast<long>(max_length) - i - 1) * v) continue;
            rows.push_back(v);
            self(self, i + 1, v, remaining - v);
            rows.pop_back();
        }
    };
    enumerate(enumerate, 0, target, target);
    return out;
}

} // namespace symcube
