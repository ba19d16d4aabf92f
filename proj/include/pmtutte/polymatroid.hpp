#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmtutte/rank.hpp"

namespace pmtutte {

// An integer polymatroid given by its rank function, plus a record of how it
// was constructed. Immutable after construction; all combinators below return
// fresh instances and re-validate as a guard.
struct Polymatroid {
    RankFunction rank;
    std::string provenance = "explicit";

    int n() const { return rank.n; }
};

// Hypergraph on vertices 0..vertexCount-1; the hyperedges are the ground-set
// elements 1..n, in order. Parallel hyperedges are allowed.
struct Hypergraph {
    int vertexCount = 0;
    std::vector<std::vector<int>> edges;

    int n() const { return static_cast<int>(edges.size()); }
};

// A matroid rank function (values in [0,|I|], unit increments).
struct MatroidOracle {
    RankFunction rank;

    int n() const { return rank.n; }
    long long matroid_rank() const { return rank.total(); }
};

Polymatroid make_polymatroid(int n, std::vector<long long> values,
                             std::string provenance = "explicit");

// The (0,1)-polymatroid of a matroid: same rank function, bases = indicator
// vectors of matroid bases.
Polymatroid as_polymatroid(const MatroidOracle& m);

// Is the bipartite incidence graph of h (on all of V plus all hyperedges)
// connected? The optional skipEdge (1-based, 0 = none) drops one hyperedge but
// keeps every vertex, i.e. tests H - e.
bool bip_connected(const Hypergraph& h, int skipEdge = 0);

// The mu-rank of a subset of hyperedges: covered vertices minus connected
// components of the induced sub-bipartite graph. Bip H must be connected.
Polymatroid rank_from_hypergraph(const Hypergraph& h);

// f(I) = min(|I|, r).
MatroidOracle rank_from_uniform_matroid(int n, int r);

// f(I) = vertexCount - #components of the spanning subgraph with edge set I.
// Self-loops are allowed (rank-0 elements).
MatroidOracle rank_from_graphic_matroid(int vertexCount,
                                        const std::vector<std::pair<int, int>>& edges);

// f'(I) = f([n] \ I) - f([n]); bases are the negations of p's bases.
Polymatroid dual_polymatroid(const Polymatroid& p);

// f'(I) = f(I) + sum_{i in I} v_i; bases shift by v.
Polymatroid translate_rank(const Polymatroid& p, const std::vector<long long>& v);

// f'(I) = f(sigma^{-1}(I)); sigma maps element i to sigma[i-1], 1-based.
Polymatroid permute_rank(const Polymatroid& p, const std::vector<int>& sigma);

// Pointwise sum; all summands must share the same ground size.
Polymatroid sum_ranks(const std::vector<Polymatroid>& ps);

// min(f, c) with f'(empty) = 0; requires p monotone and c >= 0.
Polymatroid truncate_rank(const Polymatroid& p, long long c);

}  // namespace pmtutte
