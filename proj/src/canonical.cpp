#include "tnt/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "tnt/graph_io.hpp"

namespace tnt {

namespace {

using Cells = std::vector<VertexSet>;

constexpr std::size_t kMaxStoredAutomorphisms = 128;

// Splits cells until every cell is uniform with respect to every other
// cell. Fragments are ordered by neighbour count, so the result depends only
// on the labelled structure up to isomorphism. Appends split events to trace.
void refine(const Graph& g, Cells& cells, std::vector<int>& trace)
{
    std::array<VertexSet, kMaxVertices + 1> by_count{};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
            const VertexSet splitter = cells[w];
            for (std::size_t x = 0; x < cells.size(); ++x) {
                VertexSet target = cells[x];
                if (set_size(target) == 1)
                    continue;
                int lo = kMaxVertices + 1;
                int hi = -1;
                for_each_vertex(target, [&](Vertex v) {
                    int c = set_size(g.neighbors(v) & splitter);
                    by_count[c] |= singleton(v);
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                });
                if (lo == hi) {
                    by_count[lo] = 0;
                    continue;
                }
                Cells fragments;
                trace.push_back(static_cast<int>(w));
                trace.push_back(static_cast<int>(x));
                for (int c = lo; c <= hi; ++c) {
                    if (by_count[c] == 0)
                        continue;
                    trace.push_back(c);
                    trace.push_back(set_size(by_count[c]));
                    fragments.push_back(by_count[c]);
                    by_count[c] = 0;
                }
                cells.erase(cells.begin() + static_cast<long>(x));
                cells.insert(cells.begin() + static_cast<long>(x), fragments.begin(), fragments.end());
                changed = true;
                break;
            }
        }
    }
    trace.push_back(-1);
    trace.push_back(static_cast<int>(cells.size()));
}

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<Vertex> run()
    {
        search(Cells{g_.vertices()}, Standing::Equal);
        return best_order_;
    }

private:
    // Trace of the current path relative to the best path's trace: equal so
    // far, or already strictly greater (its first leaf becomes the new best).
    enum class Standing { Equal, Better };

    void search(Cells cells, Standing standing)
    {
        const std::size_t mark = trace_.size();
        refine(g_, cells, trace_);
        if (have_best_ && standing == Standing::Equal) {
            int cmp = compare_trace_from(mark);
            if (cmp < 0) {
                trace_.resize(mark);
                return;
            }
            if (cmp > 0)
                standing = Standing::Better;
        }

        if (static_cast<int>(cells.size()) == n_) {
            at_leaf(cells, standing);
            trace_.resize(mark);
            return;
        }

        std::size_t target = 0;
        int target_size = kMaxVertices + 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            int sz = set_size(cells[i]);
            if (sz > 1 && sz < target_size) {
                target = i;
                target_size = sz;
            }
        }
        std::vector<Vertex> explored;
        for (Vertex v : members(cells[target])) {
            if (pruned_by_orbit(v, explored))
                continue;
            explored.push_back(v);
            Cells child = cells;
            child[target] &= ~singleton(v);
            child.insert(child.begin() + static_cast<long>(target), singleton(v));
            prefix_.push_back(v);
            search(std::move(child), standing);
            prefix_.pop_back();
            // The best path now shares this node's prefix.
            standing = Standing::Equal;
        }
        trace_.resize(mark);
    }

    // Compares trace_[mark..] against the best trace at the same offsets.
    int compare_trace_from(std::size_t mark) const
    {
        for (std::size_t i = mark; i < trace_.size(); ++i) {
            if (i >= best_trace_.size())
                return 1;
            if (trace_[i] != best_trace_[i])
                return trace_[i] < best_trace_[i] ? -1 : 1;
        }
        return 0;
    }

    void at_leaf(const Cells& cells, Standing standing)
    {
        std::vector<Vertex> order(n_);
        std::vector<Vertex> relabel(n_);
        for (int pos = 0; pos < n_; ++pos) {
            order[pos] = std::countr_zero(cells[pos]);
            relabel[order[pos]] = pos;
        }
        std::vector<VertexSet> rows(n_);
        for (int pos = 0; pos < n_; ++pos) {
            VertexSet row = 0;
            for_each_vertex(g_.neighbors(order[pos]), [&](Vertex u) { row |= singleton(relabel[u]); });
            rows[pos] = row;
        }
        bool replace = !have_best_ || standing == Standing::Better;
        if (!replace) {
            if (trace_.size() < best_trace_.size())
                return;
            if (trace_.size() > best_trace_.size()) {
                replace = true;
            } else if (rows > best_rows_) {
                replace = true;
            } else if (rows == best_rows_) {
                record_automorphism(order);
                return;
            } else {
                return;
            }
        }
        have_best_ = true;
        best_trace_ = trace_;
        best_rows_ = std::move(rows);
        best_order_ = std::move(order);
    }

    void record_automorphism(const std::vector<Vertex>& order)
    {
        if (automorphisms_.size() >= kMaxStoredAutomorphisms)
            return;
        std::vector<Vertex> gamma(n_);
        for (int pos = 0; pos < n_; ++pos)
            gamma[best_order_[pos]] = order[pos];
        automorphisms_.push_back(std::move(gamma));
    }

    bool pruned_by_orbit(Vertex v, const std::vector<Vertex>& explored) const
    {
        if (explored.empty() || automorphisms_.empty())
            return false;
        std::vector<Vertex> root(n_);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](Vertex x) {
            while (root[x] != x)
                x = root[x] = root[root[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes_prefix = std::all_of(prefix_.begin(), prefix_.end(),
                                            [&](Vertex p) { return gamma[p] == p; });
            if (!fixes_prefix)
                continue;
            for (Vertex x = 0; x < n_; ++x) {
                Vertex a = find(x);
                Vertex b = find(gamma[x]);
                if (a != b)
                    root[std::max(a, b)] = std::min(a, b);
            }
        }
        Vertex rv = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return find(u) == rv; });
    }

    const Graph& g_;
    const int n_;
    std::vector<int> trace_;
    std::vector<Vertex> prefix_;
    bool have_best_ = false;
    std::vector<int> best_trace_;
    std::vector<VertexSet> best_rows_;
    std::vector<Vertex> best_order_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g)
{
    std::vector<Vertex> order = Canonizer(g).run();
    std::vector<Vertex> relabel(g.order());
    for (int pos = 0; pos < g.order(); ++pos)
        relabel[order[pos]] = pos;
    Graph canon = g.permuted(relabel);
    return {std::move(relabel), std::move(canon)};
}

CanonicalForm canonical_form(const Graph& g)
{
    return {graph6_encode(canonical_labeling(g).graph)};
}

namespace {

bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<Vertex>& map, VertexSet used, Vertex v)
{
    const int n = g.order();
    if (v == n)
        return true;
    for (Vertex w = 0; w < n; ++w) {
        if (contains(used, w) || g.degree(v) != h.degree(w))
            continue;
        bool ok = true;
        for (Vertex u = 0; u < v && ok; ++u)
            ok = g.adjacent(u, v) == h.adjacent(map[u], w);
        if (!ok)
            continue;
        map[v] = w;
        if (extend_isomorphism(g, h, map, used | singleton(w), v + 1))
            return true;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    auto dg = g.degree_sequence();
    auto dh = h.degree_sequence();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return false;
    std::vector<Vertex> map(g.order());
    return extend_isomorphism(g, h, map, 0, 0);
}

} // namespace tnt
