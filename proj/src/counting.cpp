#include "tnt/counting.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace tnt {

namespace {

using Big = boost::multiprecision::cpp_int;

// Sum of C(|N(A)|, b) over a-subsets A of pool (members drawn ascending).
Count sum_biclique(const Graph& g, VertexSet pool, VertexSet common, int need, int b)
{
    if (need == 0)
        return binomial(set_size(common), b);
    Count total = 0;
    while (set_size(pool) >= need) {
        Vertex v = std::countr_zero(pool);
        pool &= pool - 1;
        VertexSet next = common & g.neighbors(v);
        if (set_size(next) >= b)
            total = checked_add(total, sum_biclique(g, pool, next, need - 1, b));
    }
    return total;
}

VertexSet above(Vertex v) { return v < 0 ? ~VertexSet{0} : ~prefix_mask(v + 1); }

// Walks copies of a complete multipartite pattern part by part. Parts of
// equal size are ordered by their smallest vertex so every unordered family
// is visited once.
class MultipartiteWalker {
public:
    MultipartiteWalker(const Graph& g, const MultipartitePattern& p) : g_(g), parts_(p.parts())
    {
        rest_.assign(parts_.size() + 1, 0);
        for (int i = static_cast<int>(parts_.size()) - 1; i >= 0; --i)
            rest_[i] = rest_[i + 1] + parts_[i];
        chosen_.assign(parts_.size(), 0);
    }

    Count count()
    {
        counting_ = true;
        total_ = 0;
        if (rest_[0] <= g_.order())
            part(0, g_.vertices(), -1);
        return total_;
    }

    std::optional<std::vector<VertexSet>> find()
    {
        counting_ = false;
        found_ = false;
        if (rest_[0] <= g_.order())
            part(0, g_.vertices(), -1);
        if (!found_)
            return std::nullopt;
        return chosen_;
    }

private:
    // allowed: vertices adjacent to every vertex of parts 0..i-1.
    void part(std::size_t i, VertexSet allowed, Vertex prev_first)
    {
        const bool tied = i > 0 && parts_[i] == parts_[i - 1];
        VertexSet pool = tied ? allowed & above(prev_first) : allowed;
        if (i + 1 == parts_.size()) {
            if (counting_) {
                total_ = checked_add(total_, binomial(set_size(pool), parts_[i]));
            } else if (set_size(pool) >= parts_[i]) {
                VertexSet pick = 0;
                for (int k = 0; k < parts_[i]; ++k) {
                    pick |= pool & -pool;
                    pool &= pool - 1;
                }
                chosen_[i] = pick;
                found_ = true;
            }
            return;
        }
        fill(i, pool, allowed, 0, parts_[i], -1);
    }

    void fill(std::size_t i, VertexSet pool, VertexSet future, VertexSet members, int left, Vertex first)
    {
        if (left == 0) {
            chosen_[i] = members;
            part(i + 1, future, first);
            return;
        }
        while (set_size(pool) >= left && !found_) {
            Vertex v = std::countr_zero(pool);
            pool &= pool - 1;
            VertexSet next = future & g_.neighbors(v);
            if (set_size(next) < rest_[i + 1])
                continue;
            fill(i, pool, next, members | singleton(v), left - 1, first < 0 ? v : first);
        }
    }

    const Graph& g_;
    const std::vector<int>& parts_;
    std::vector<int> rest_;
    std::vector<VertexSet> chosen_;
    bool counting_ = true;
    bool found_ = false;
    Count total_ = 0;
};

Big big_binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Big out = 1;
    for (long i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

Count saturate(const Big& value)
{
    if (value > Big(std::numeric_limits<Count>::max()))
        return std::numeric_limits<Count>::max();
    return value.convert_to<Count>();
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw InputError(what);
}

} // namespace

Count count_bipartite(const Graph& g, int a, int b, unsigned workers)
{
    require(a >= 1 && a <= b, "count_bipartite requires 1 <= a <= b");
    if (a + b > g.order())
        return 0;
    const int n = g.order();
    Count total = 0;
    if (workers <= 1) {
        total = sum_biclique(g, g.vertices(), g.vertices(), a, b);
    } else {
        // Worker w takes first vertices w, w + workers, ...; partial sums
        // are combined in a fixed order.
        std::vector<Count> partial(workers, 0);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                Count sum = 0;
                for (Vertex v = static_cast<Vertex>(w); v < n; v += static_cast<Vertex>(workers)) {
                    VertexSet common = g.neighbors(v);
                    if (set_size(common) >= b)
                        sum = checked_add(sum, sum_biclique(g, above(v) & g.vertices(), common, a - 1, b));
                }
                partial[w] = sum;
            });
        }
        for (auto& t : pool)
            t.join();
        for (Count c : partial)
            total = checked_add(total, c);
    }
    return a == b ? total / 2 : total;
}

Count count_multipartite(const Graph& g, const MultipartitePattern& p)
{
    if (p.is_bipartite())
        return count_bipartite(g, p.part(0), p.part(1));
    return MultipartiteWalker(g, p).count();
}

Count count_stars(const Graph& g, int b)
{
    require(b >= 2, "count_stars requires b >= 2");
    Count total = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        total = checked_add(total, binomial(g.degree(v), b));
    return total;
}

std::optional<std::vector<VertexSet>> find_multipartite(const Graph& g, const MultipartitePattern& p)
{
    return MultipartiteWalker(g, p).find();
}

bool contains_multipartite(const Graph& g, const MultipartitePattern& p)
{
    if (p.is_bipartite())
        return contains_complete_bipartite(g, p.part(0), p.part(1));
    return find_multipartite(g, p).has_value();
}

bool contains_multipartite_at(const Graph& g, const MultipartitePattern& p, Vertex v)
{
    if (p.is_bipartite())
        return contains_complete_bipartite_at(g, p.part(0), p.part(1), v);
    // Any copy must use v when g - v is p-free.
    return contains_multipartite(g, p);
}

NeighborHistogram neighbor_histogram(const Graph& g, int k)
{
    require(k >= 1 && k <= g.order(), "neighbor_histogram requires 1 <= k <= n");
    NeighborHistogram out;
    out.subset_size = k;
    auto walk = [&](auto&& self, VertexSet pool, VertexSet common, int need) -> void {
        if (need == 0) {
            ++out.histogram[set_size(common)];
            return;
        }
        while (set_size(pool) >= need) {
            Vertex v = std::countr_zero(pool);
            pool &= pool - 1;
            self(self, pool, common & g.neighbors(v), need - 1);
        }
    };
    walk(walk, g.vertices(), g.vertices(), k);
    return out;
}

BSetClassification classify_bsets(const Graph& g, int b, int s)
{
    require(b >= 1 && s >= 2, "classify_bsets requires b >= 1 and s >= 2");
    BSetClassification out;
    out.b = b;
    out.s = s;
    if (b > g.order())
        return out;
    for (auto [size, count] : neighbor_histogram(g, b).histogram) {
        if (size == s - 1)
            out.good += count;
        else if (size <= s - 2)
            out.bad += count;
        else
            out.over += count;
    }
    return out;
}

Count bound_gemevi(long n, int a, int b, int s, int t)
{
    require(n >= 0 && s >= 1 && s <= a && a <= b && b <= t, "bound_gemevi requires s <= a <= b <= t");
    Big num = big_binomial(n, s) * big_binomial(t - 1, a) * big_binomial(t - 1 - s, b - s);
    return saturate(num / big_binomial(b, s));
}

Count bound_smallside(long n, int a, int b, int s, int t)
{
    require(n >= 0 && a >= 1 && a < s && s <= b && s <= t, "bound_smallside requires a < s <= b and s <= t");
    int shared = t <= b ? s - 1 : t - 1;
    return saturate(big_binomial(shared, a) * big_binomial(n, b));
}

Count bound_star_per_vertex(long n, int a, int b, int t)
{
    require(n >= 0 && a >= 1 && a <= b && b < t, "bound_star_per_vertex requires 1 <= a <= b < t");
    if (a == b)
        return saturate(Big(n) * big_binomial(t - 1, a) * big_binomial(t - 1, a - 1) / (2 * a));
    Big per_vertex = big_binomial(t - 1, a) * big_binomial(t - 1, b - 1) +
                     big_binomial(t - 1, b) * big_binomial(t - 1, a - 1);
    return saturate(Big(n) * per_vertex / (a + b));
}

Count closed_count_biclique_host(int m, int k, int a, int b)
{
    require(a >= 1 && a <= b && m >= 0 && k >= 0, "closed_count_biclique_host requires 1 <= a <= b");
    if (a == b)
        return checked_mul(binomial(m, a), binomial(k, a));
    return checked_add(checked_mul(binomial(m, a), binomial(k, b)), checked_mul(binomial(m, b), binomial(k, a)));
}

} // namespace tnt
