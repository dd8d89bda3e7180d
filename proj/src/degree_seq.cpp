#include "degseq/degree_seq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace degseq {

bool is_graphic(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return true;
    long long sum = 0;
    for (int x : d) {
        if (x < 0 || x >= n) return false;
        sum += x;
    }
    if (sum % 2 != 0) return false;
    std::vector<int> s = d;
    std::sort(s.begin(), s.end(), std::greater<int>());
    // Erdos-Gallai: for each prefix r, sum_{i<=r} s_i <= r(r-1) + sum_{i>r} min(s_i, r)
    std::vector<long long> prefix(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        prefix[static_cast<size_t>(i) + 1] = prefix[static_cast<size_t>(i)] + s[static_cast<size_t>(i)];
    for (int r = 1; r <= n; ++r) {
        long long lhs = prefix[static_cast<size_t>(r)];
        long long rhs = static_cast<long long>(r) * (r - 1);
        // s is sorted desc: entries <= r form a suffix, find it once per r
        auto it = std::lower_bound(s.begin(), s.end(), r, std::greater<int>());
        int cut = static_cast<int>(it - s.begin()); // first index with s[i] <= r
        if (cut < r) cut = r;
        rhs += static_cast<long long>(r) * (cut - r);
        rhs += prefix[static_cast<size_t>(n)] - prefix[static_cast<size_t>(cut)];
        if (lhs > rhs) return false;
    }
    return true;
}

namespace {

std::optional<Graph> havel_hakimi(const std::vector<int>& d, const Graph* hint) {
    const int n = static_cast<int>(d.size());
    if (!is_graphic(d)) return std::nullopt;
    Graph g(n);
    std::vector<int> residual = d;
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int step = 0; step < n; ++step) {
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (residual[static_cast<size_t>(a)] != residual[static_cast<size_t>(b)])
                return residual[static_cast<size_t>(a)] > residual[static_cast<size_t>(b)];
            return a < b;
        });
        int pivot = order[0];
        int need = residual[static_cast<size_t>(pivot)];
        if (need == 0) break;
        residual[static_cast<size_t>(pivot)] = 0;
        // candidates: everything after the pivot in the order
        std::vector<int> cand(order.begin() + 1, order.end());
        if (hint != nullptr) {
            // stable: among equal residuals prefer partners adjacent in hint
            std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
                if (residual[static_cast<size_t>(a)] != residual[static_cast<size_t>(b)])
                    return residual[static_cast<size_t>(a)] > residual[static_cast<size_t>(b)];
                bool ea = hint->adjacent(pivot, a), eb = hint->adjacent(pivot, b);
                if (ea != eb) return ea;
                return a < b;
            });
        }
        if (need > static_cast<int>(cand.size())) return std::nullopt;
        for (int i = 0; i < need; ++i) {
            int v = cand[static_cast<size_t>(i)];
            if (residual[static_cast<size_t>(v)] <= 0) return std::nullopt;
            g.add_edge(pivot, v);
            --residual[static_cast<size_t>(v)];
        }
    }
    for (int v = 0; v < n; ++v)
        if (residual[static_cast<size_t>(v)] != 0) return std::nullopt;
    return g;
}

} // namespace

std::optional<Graph> realize(const std::vector<int>& d) { return havel_hakimi(d, nullptr); }

std::optional<Graph> realize_near(const std::vector<int>& d, const Graph& hint) {
    if (static_cast<int>(d.size()) != hint.vertex_count())
        throw std::invalid_argument("realize_near: size mismatch");
    return havel_hakimi(d, &hint);
}

double l1_distance(const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("l1_distance: length mismatch");
    if (x.empty()) return 0.0;
    long long sum = 0;
    for (size_t i = 0; i < x.size(); ++i) sum += std::llabs(static_cast<long long>(x[i]) - y[i]);
    const double n = static_cast<double>(x.size());
    return static_cast<double>(sum) / (n * n);
}

double multiset_l1(const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("multiset_l1: length mismatch");
    std::vector<int> a = x, b = y;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return l1_distance(a, b);
}

void validate_statistic(const DegreeStatistic& stat) {
    if (stat.k < 1 || static_cast<int>(stat.alpha.size()) != stat.k)
        throw std::invalid_argument("DegreeStatistic: k must be >= 1 and match alpha size");
    double sum = 0.0;
    for (double a : stat.alpha) {
        if (a < -1e-12 || a > 1.0 + 1e-12)
            throw std::invalid_argument("DegreeStatistic: alpha entry out of [0,1]");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("DegreeStatistic: alpha does not sum to 1");
}

int bucket_value(int n, int k, int ell) {
    // round half-up of (2*ell-1)*n / (2k), clamped to [0, n-1]
    const long long num = static_cast<long long>(2 * ell - 1) * n;
    const long long den = 2LL * k;
    long long v = (2 * num + den) / (2 * den);
    if (v < 0) v = 0;
    if (v > n - 1) v = n - 1;
    return static_cast<int>(v);
}

std::vector<long long> bucket_counts(int n, const DegreeStatistic& stat) {
    validate_statistic(stat);
    if (n < 0) throw std::invalid_argument("bucket_counts: negative n");
    const int k = stat.k;
    std::vector<long long> counts(static_cast<size_t>(k), 0);
    std::vector<std::pair<double, int>> rem; // (-remainder, index) for stable tie-break
    long long assigned = 0;
    for (int ell = 0; ell < k; ++ell) {
        double exact = stat.alpha[static_cast<size_t>(ell)] * n;
        long long base = static_cast<long long>(std::floor(exact + 1e-9));
        if (base > n) base = n;
        counts[static_cast<size_t>(ell)] = base;
        assigned += base;
        rem.emplace_back(-(exact - static_cast<double>(base)), ell);
    }
    std::stable_sort(rem.begin(), rem.end());
    long long leftover = n - assigned;
    for (size_t i = 0; leftover > 0 && i < rem.size(); ++i) {
        ++counts[static_cast<size_t>(rem[i].second)];
        --leftover;
    }
    if (leftover != 0) throw std::logic_error("bucket_counts: apportionment failed");
    return counts;
}

std::vector<int> expand_statistic(int n, const DegreeStatistic& stat) {
    if (n < 1) throw std::invalid_argument("expand_statistic: n must be >= 1");
    const auto counts = bucket_counts(n, stat);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    for (int ell = 1; ell <= stat.k; ++ell) {
        int v = bucket_value(n, stat.k, ell);
        for (long long c = 0; c < counts[static_cast<size_t>(ell - 1)]; ++c) out.push_back(v);
    }
    // bucket values are non-decreasing in ell, so out is already sorted
    return out;
}

bool delta_approximates(const DegreeStatistic& stat, const Graph& g, double delta) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    return multiset_l1(degree_sequence(g), expand_statistic(n, stat)) <= delta + 1e-12;
}

} // namespace degseq
