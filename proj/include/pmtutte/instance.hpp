#pragma once

#include <pmtutte/bivariate.hpp>
#include <pmtutte/polymatroid.hpp>
#include <pmtutte/univariate.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace pmtutte {

// Parsed form of the "rank" field of an instance file; a small recipe tree
// whose node kinds mirror the polymatroid constructors one-to-one.
struct RankSpec {
    enum class Type {
        Explicit,
        Hypergraph,
        Uniform,
        Graphic,
        Dual,
        Translate,
        Permute,
        Sum,
        Truncate,
    };

    Type type = Type::Explicit;

    std::vector<long long> values;        // Explicit: 2^n entries, index = SubsetMask
    int vertices = 0;                     // Hypergraph / Graphic
    std::vector<std::vector<int>> edges;  // Hypergraph / Graphic, 1-based vertex labels
    int uniformN = 0;                     // Uniform
    long long uniformR = 0;               // Uniform
    std::vector<RankSpec> children;       // one child for Dual/Translate/Permute/Truncate
    std::vector<long long> by;            // Translate
    std::vector<int> perm;                // Permute: perm[i-1] = sigma(i), 1-based
    long long cap = 0;                    // Truncate

    int n() const;
};

struct Instance {
    RankSpec spec;
    Polymatroid poly;

    int n() const { return poly.n(); }
};

// Materializes the rank function described by the recipe; throws
// std::invalid_argument on inconsistent dimensions or invalid rank data.
Polymatroid build_polymatroid(const RankSpec& spec);

// Raw rank table of a recipe with no axiom checking, so a deliberately
// broken explicit table can be inspected by the validator. Graph-backed
// recipes still check their combinatorial inputs (label ranges,
// connectivity), which cannot be meaningfully skipped.
std::vector<long long> spec_rank_table(const RankSpec& spec);

// The hypergraph behind a top-level hypergraph recipe, with 0-based vertex
// ids; throws std::invalid_argument for any other recipe kind.
Hypergraph hypergraph_from_spec(const RankSpec& spec);

// Instance files are JSON: {"n": int, "rank": <recipe>}. Parse errors carry
// line/column positions; semantic errors name the offending field path.
Instance parse_instance(const std::string& text);
Instance parse_instance_file(const std::string& path);

// Shape-only parse: checks JSON structure and the declared n, but does not
// materialize or validate the rank table.
std::pair<int, RankSpec> parse_instance_spec(const std::string& text);
std::pair<int, RankSpec> parse_instance_spec_file(const std::string& path);

nlohmann::ordered_json spec_to_json(const RankSpec& spec);
nlohmann::ordered_json instance_to_json(const Instance& inst);

// Machine form of a polynomial: a list of [degX, degY, "coeff"] triples
// sorted by (degX, degY); coefficients as decimal strings.
nlohmann::ordered_json poly_to_json(const BivariatePolynomial& poly);
// Univariate form: [deg, "p/q"] pairs sorted by degree.
nlohmann::ordered_json poly_to_json(const UnivariateRationalPolynomial& poly);

}  // namespace pmtutte
