#include "pmtutte/polymatroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pmtutte {

namespace {

// Union-find over a fixed node universe.
class DisjointSets {
  public:
    explicit DisjointSets(int size) : parent_(size) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

  private:
    std::vector<int> parent_;
};

void check_hypergraph(const Hypergraph& h) {
    if (h.vertexCount < 1) throw std::invalid_argument("hypergraph needs at least one vertex");
    require_ground_size(h.n());
    for (const auto& edge : h.edges) {
        if (edge.empty()) throw std::invalid_argument("hyperedges must be non-empty");
        std::vector<int> sorted = edge;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("hyperedge lists a vertex twice");
        for (int v : edge)
            if (v < 0 || v >= h.vertexCount)
                throw std::invalid_argument("hyperedge vertex out of range");
    }
}

}  // namespace

Polymatroid make_polymatroid(int n, std::vector<long long> values, std::string provenance) {
    return Polymatroid{make_rank_function(n, std::move(values)), std::move(provenance)};
}

Polymatroid as_polymatroid(const MatroidOracle& m) {
    return Polymatroid{m.rank, "matroid"};
}

bool bip_connected(const Hypergraph& h, int skipEdge) {
    // Nodes: vertices 0..V-1, then hyperedge e as V + (e-1).
    const int n = h.n();
    DisjointSets ds(h.vertexCount + n);
    for (int e = 1; e <= n; ++e) {
        if (e == skipEdge) continue;
        for (int v : h.edges[e - 1]) ds.unite(h.vertexCount + (e - 1), v);
    }
    int components = 0;
    for (int v = 0; v < h.vertexCount; ++v)
        if (ds.find(v) == v) ++components;
    for (int e = 1; e <= n; ++e) {
        if (e == skipEdge) continue;
        const int node = h.vertexCount + (e - 1);
        if (ds.find(node) == node) ++components;
    }
    return components == 1;
}

Polymatroid rank_from_hypergraph(const Hypergraph& h) {
    check_hypergraph(h);
    if (!bip_connected(h))
        throw std::invalid_argument("bipartite incidence graph is disconnected");

    const int n = h.n();
    const std::size_t size = std::size_t{1} << n;
    std::vector<long long> values(size, 0);
    for (SubsetMask s = 1; s < size; ++s) {
        DisjointSets ds(h.vertexCount + n);
        std::vector<bool> covered(h.vertexCount, false);
        for (int e = 1; e <= n; ++e) {
            if (!mask_contains(s, e)) continue;
            for (int v : h.edges[e - 1]) {
                covered[v] = true;
                ds.unite(h.vertexCount + (e - 1), v);
            }
        }
        long long vertices = 0;
        long long components = 0;
        for (int v = 0; v < h.vertexCount; ++v) {
            if (!covered[v]) continue;
            ++vertices;
            if (ds.find(v) == v) ++components;
        }
        // Every selected hyperedge is non-empty, so each component has a
        // vertex representative candidate; count components by roots among
        // covered vertices and edge nodes that are their own root.
        for (int e = 1; e <= n; ++e) {
            if (!mask_contains(s, e)) continue;
            const int node = h.vertexCount + (e - 1);
            if (ds.find(node) == node) ++components;
        }
        values[s] = vertices - components;
    }
    return Polymatroid{make_rank_function(n, std::move(values)), "hypergraph"};
}

MatroidOracle rank_from_uniform_matroid(int n, int r) {
    require_ground_size(n);
    if (r < 0 || r > n) throw std::invalid_argument("uniform matroid rank out of range");
    const std::size_t size = std::size_t{1} << n;
    std::vector<long long> values(size);
    for (SubsetMask s = 0; s < size; ++s)
        values[s] = std::min<long long>(mask_size(s), r);
    return MatroidOracle{make_rank_function(n, std::move(values))};
}

MatroidOracle rank_from_graphic_matroid(int vertexCount,
                                        const std::vector<std::pair<int, int>>& edges) {
    if (vertexCount < 1) throw std::invalid_argument("graph needs at least one vertex");
    const int n = static_cast<int>(edges.size());
    require_ground_size(n);
    for (const auto& [u, v] : edges)
        if (u < 0 || u >= vertexCount || v < 0 || v >= vertexCount)
            throw std::invalid_argument("edge endpoint out of range");

    const std::size_t size = std::size_t{1} << n;
    std::vector<long long> values(size);
    for (SubsetMask s = 0; s < size; ++s) {
        DisjointSets ds(vertexCount);
        for (int e = 1; e <= n; ++e)
            if (mask_contains(s, e)) ds.unite(edges[e - 1].first, edges[e - 1].second);
        int components = 0;
        for (int v = 0; v < vertexCount; ++v)
            if (ds.find(v) == v) ++components;
        values[s] = vertexCount - components;
    }
    return MatroidOracle{make_rank_function(n, std::move(values))};
}

Polymatroid dual_polymatroid(const Polymatroid& p) {
    const RankFunction& f = p.rank;
    const SubsetMask full = f.full();
    const long long total = f.total();
    std::vector<long long> values(f.values.size());
    for (SubsetMask s = 0; s <= full; ++s) values[s] = f(full ^ s) - total;
    return Polymatroid{make_rank_function(f.n, std::move(values)),
                       "dual(" + p.provenance + ")"};
}

Polymatroid translate_rank(const Polymatroid& p, const std::vector<long long>& v) {
    const RankFunction& f = p.rank;
    if (static_cast<int>(v.size()) != f.n)
        throw std::invalid_argument("translation vector length mismatch");
    std::vector<long long> values(f.values.size());
    for (SubsetMask s = 0; s < values.size(); ++s) {
        long long shift = 0;
        for (int i = 1; i <= f.n; ++i)
            if (mask_contains(s, i)) shift += v[i - 1];
        values[s] = f(s) + shift;
    }
    return Polymatroid{make_rank_function(f.n, std::move(values)),
                       "translate(" + p.provenance + ")"};
}

Polymatroid permute_rank(const Polymatroid& p, const std::vector<int>& sigma) {
    const RankFunction& f = p.rank;
    if (static_cast<int>(sigma.size()) != f.n)
        throw std::invalid_argument("permutation length mismatch");
    std::vector<bool> seen(f.n, false);
    for (int image : sigma) {
        if (image < 1 || image > f.n || seen[image - 1])
            throw std::invalid_argument("not a permutation of [n]");
        seen[image - 1] = true;
    }
    std::vector<long long> values(f.values.size());
    for (SubsetMask s = 0; s < values.size(); ++s) {
        SubsetMask image = 0;
        for (int i = 1; i <= f.n; ++i)
            if (mask_contains(s, i)) image |= element_bit(sigma[i - 1]);
        values[image] = f(s);  // f'(sigma(I)) = f(I)
    }
    return Polymatroid{make_rank_function(f.n, std::move(values)),
                       "permute(" + p.provenance + ")"};
}

Polymatroid sum_ranks(const std::vector<Polymatroid>& ps) {
    if (ps.empty()) throw std::invalid_argument("sum of zero rank functions");
    const int n = ps.front().n();
    std::vector<long long> values(std::size_t{1} << n, 0);
    std::string provenance = "sum(";
    for (std::size_t k = 0; k < ps.size(); ++k) {
        if (ps[k].n() != n) throw std::invalid_argument("sum requires equal ground sizes");
        for (SubsetMask s = 0; s < values.size(); ++s) values[s] += ps[k].rank(s);
        provenance += (k ? "," : "") + ps[k].provenance;
    }
    return Polymatroid{make_rank_function(n, std::move(values)), provenance + ")"};
}

Polymatroid truncate_rank(const Polymatroid& p, long long c) {
    if (!p.rank.monotone) throw std::invalid_argument("truncation requires a monotone rank");
    if (c < 0) throw std::invalid_argument("truncation level must be >= 0");
    std::vector<long long> values(p.rank.values.size());
    for (SubsetMask s = 0; s < values.size(); ++s)
        values[s] = std::min(p.rank(s), c);
    return Polymatroid{make_rank_function(p.n(), std::move(values)),
                       "truncate(" + p.provenance + ")"};
}

}  // namespace pmtutte
