#include "brep/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace brep {

int Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Partition::valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

std::pair<int, int> StandardTableau::position_of(int v) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == v) return {static_cast<int>(r), static_cast<int>(c)};
    throw std::invalid_argument("value not in tableau");
}

int StandardTableau::content_of(int v) const {
    auto [r, c] = position_of(v);
    return c - r;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

void tableaux_rec(const Partition& shape, std::vector<std::vector<int>>& rows,
                  int next, int n, std::vector<StandardTableau>& out) {
    if (next > n) {
        out.push_back({shape, rows});
        return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t filled = rows[r].size();
        if (static_cast<int>(filled) >= shape.parts[r]) continue;
        if (r > 0 && rows[r - 1].size() <= filled) continue;
        rows[r].push_back(next);
        tableaux_rec(shape, rows, next + 1, n, out);
        rows[r].pop_back();
    }
}

// Last-letter order: compare at the largest entry placed differently, the
// tableau holding it in the later row comes first.
bool last_letter_less(const StandardTableau& a, const StandardTableau& b) {
    int n = a.shape.weight();
    for (int v = n; v >= 1; --v) {
        auto pa = a.position_of(v), pb = b.position_of(v);
        if (pa != pb) return pa > pb;
    }
    return false;
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

std::int64_t partition_count(int n) {
    if (n < 0) throw std::invalid_argument("partition_count: n must be >= 0");
    // Euler's pentagonal recurrence.
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) p[m] += sign * p[m - g1];
            if (g2 <= m) p[m] += sign * p[m - g2];
        }
    }
    return p[n];
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    if (!shape.valid()) throw std::invalid_argument("invalid partition");
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(shape.parts.size());
    tableaux_rec(shape, rows, 1, shape.weight(), out);
    std::sort(out.begin(), out.end(), last_letter_less);
    return out;
}

std::int64_t irrep_dimension(const Partition& shape) {
    if (!shape.valid()) throw std::invalid_argument("invalid partition");
    int n = shape.weight();
    std::vector<int> col_len;  // conjugate partition
    for (int c = 0;; ++c) {
        int len = 0;
        for (int p : shape.parts)
            if (p > c) ++len;
        if (len == 0) break;
        col_len.push_back(len);
    }
    Integer num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    Integer hooks = 1;
    for (std::size_t r = 0; r < shape.parts.size(); ++r)
        for (int c = 0; c < shape.parts[r]; ++c) {
            int hook = (shape.parts[r] - c - 1) + (col_len[c] - static_cast<int>(r) - 1) + 1;
            hooks *= hook;
        }
    Integer d = num / hooks;
    return d.convert_to<std::int64_t>();
}

std::int64_t monomial_at_ones(const Partition& lambda, int q) {
    if (q < 1) throw std::invalid_argument("monomial_at_ones: q must be >= 1");
    int l = lambda.length();
    if (l > q) return 0;
    std::map<int, int> mult;
    for (int p : lambda.parts) ++mult[p];
    std::int64_t r = factorial(q) / factorial(q - l);
    for (auto& [v, m] : mult) r /= factorial(m);
    return r;
}

}  // namespace brep
