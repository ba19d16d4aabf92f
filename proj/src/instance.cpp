#include <pmtutte/instance.hpp>

#include <pmtutte/rational.hpp>
#include <pmtutte/subsets.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pmtutte {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(const std::string& path, const std::string& message) {
    throw std::invalid_argument("invalid instance: " + path + ": " + message);
}

const json& field(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail_at(path, std::string("missing field \"") + key + '"');
    return *it;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed) {
            if (it.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) fail_at(path, "unknown field \"" + it.key() + '"');
    }
}

long long as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail_at(path, "expected an integer");
    if (v.is_number_unsigned() &&
        v.get<unsigned long long>() >
            static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
        fail_at(path, "integer out of range");
    }
    return v.get<long long>();
}

long long as_int_in(const json& v, const std::string& path, long long lo, long long hi) {
    const long long x = as_int(v, path);
    if (x < lo || x > hi) {
        fail_at(path, "value " + std::to_string(x) + " out of range [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    }
    return x;
}

std::vector<long long> as_int_array(const json& v, const std::string& path) {
    if (!v.is_array()) fail_at(path, "expected an array");
    std::vector<long long> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(as_int(v[i], path + '[' + std::to_string(i) + ']'));
    }
    return out;
}

RankSpec parse_spec(const json& j, const std::string& path);

RankSpec parse_child(const json& obj, const std::string& path) {
    return parse_spec(field(obj, "of", path), path + ".of");
}

RankSpec parse_spec(const json& j, const std::string& path) {
    if (!j.is_object()) fail_at(path, "expected an object");
    const json& typeField = field(j, "type", path);
    if (!typeField.is_string()) fail_at(path + ".type", "expected a string");
    const std::string type = typeField.get<std::string>();

    RankSpec spec;
    if (type == "explicit") {
        check_keys(j, {"type", "values"}, path);
        spec.type = RankSpec::Type::Explicit;
        spec.values = as_int_array(field(j, "values", path), path + ".values");
        const std::size_t size = spec.values.size();
        if (size < 2 || size > (std::size_t{1} << kMaxGroundSize) ||
            (size & (size - 1)) != 0) {
            fail_at(path + ".values",
                    "need 2^n entries (1 <= n <= " + std::to_string(kMaxGroundSize) +
                        "), one per subset bitmask; got " + std::to_string(size));
        }
    } else if (type == "hypergraph" || type == "graphic") {
        check_keys(j, {"type", "vertices", "edges"}, path);
        spec.type = type == "hypergraph" ? RankSpec::Type::Hypergraph : RankSpec::Type::Graphic;
        spec.vertices =
            static_cast<int>(as_int_in(field(j, "vertices", path), path + ".vertices", 1,
                                       std::numeric_limits<int>::max()));
        const json& edges = field(j, "edges", path);
        if (!edges.is_array()) fail_at(path + ".edges", "expected an array");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const std::string edgePath = path + ".edges[" + std::to_string(e) + ']';
            std::vector<long long> labels = as_int_array(edges[e], edgePath);
            if (spec.type == RankSpec::Type::Graphic && labels.size() != 2) {
                fail_at(edgePath, "graph edges are [u, v] pairs");
            }
            std::vector<int> edge;
            for (std::size_t k = 0; k < labels.size(); ++k) {
                if (labels[k] < 1 || labels[k] > spec.vertices) {
                    fail_at(edgePath + '[' + std::to_string(k) + ']',
                            "vertex label out of range [1, " + std::to_string(spec.vertices) + ']');
                }
                edge.push_back(static_cast<int>(labels[k]));
            }
            spec.edges.push_back(std::move(edge));
        }
    } else if (type == "uniform") {
        check_keys(j, {"type", "n", "r"}, path);
        spec.type = RankSpec::Type::Uniform;
        spec.uniformN =
            static_cast<int>(as_int_in(field(j, "n", path), path + ".n", 1, kMaxGroundSize));
        spec.uniformR = as_int(field(j, "r", path), path + ".r");
    } else if (type == "dual") {
        check_keys(j, {"type", "of"}, path);
        spec.type = RankSpec::Type::Dual;
        spec.children.push_back(parse_child(j, path));
    } else if (type == "translate") {
        check_keys(j, {"type", "of", "by"}, path);
        spec.type = RankSpec::Type::Translate;
        spec.children.push_back(parse_child(j, path));
        spec.by = as_int_array(field(j, "by", path), path + ".by");
    } else if (type == "permute") {
        check_keys(j, {"type", "of", "perm"}, path);
        spec.type = RankSpec::Type::Permute;
        spec.children.push_back(parse_child(j, path));
        for (long long image : as_int_array(field(j, "perm", path), path + ".perm")) {
            spec.perm.push_back(static_cast<int>(image));
        }
    } else if (type == "sum") {
        check_keys(j, {"type", "of"}, path);
        spec.type = RankSpec::Type::Sum;
        const json& parts = field(j, "of", path);
        if (!parts.is_array() || parts.empty()) {
            fail_at(path + ".of", "expected a non-empty array of rank recipes");
        }
        for (std::size_t k = 0; k < parts.size(); ++k) {
            spec.children.push_back(parse_spec(parts[k], path + ".of[" + std::to_string(k) + ']'));
        }
    } else if (type == "truncate") {
        check_keys(j, {"type", "of", "c"}, path);
        spec.type = RankSpec::Type::Truncate;
        spec.children.push_back(parse_child(j, path));
        spec.cap = as_int(field(j, "c", path), path + ".c");
    } else {
        fail_at(path + ".type", "unknown rank type \"" + type + '"');
    }
    return spec;
}

}  // namespace

int RankSpec::n() const {
    switch (type) {
        case Type::Explicit: {
            const std::size_t size = values.size();
            if (size == 0 || (size & (size - 1)) != 0) {
                throw std::invalid_argument("explicit rank table size must be a power of two");
            }
            return std::bit_width(size) - 1;
        }
        case Type::Hypergraph:
        case Type::Graphic:
            return static_cast<int>(edges.size());
        case Type::Uniform:
            return uniformN;
        case Type::Dual:
        case Type::Translate:
        case Type::Permute:
        case Type::Sum:
        case Type::Truncate:
            return children.at(0).n();
    }
    throw std::logic_error("unhandled rank spec type");
}

Polymatroid build_polymatroid(const RankSpec& spec) {
    switch (spec.type) {
        case RankSpec::Type::Explicit:
            return make_polymatroid(spec.n(), spec.values, "explicit");
        case RankSpec::Type::Hypergraph: {
            Hypergraph h;
            h.vertexCount = spec.vertices;
            for (const auto& edge : spec.edges) {
                std::vector<int> zeroBased;
                for (int v : edge) zeroBased.push_back(v - 1);
                h.edges.push_back(std::move(zeroBased));
            }
            return rank_from_hypergraph(h);
        }
        case RankSpec::Type::Uniform: {
            MatroidOracle m = rank_from_uniform_matroid(
                spec.uniformN, static_cast<int>(spec.uniformR));
            return Polymatroid{std::move(m.rank), "uniform"};
        }
        case RankSpec::Type::Graphic: {
            std::vector<std::pair<int, int>> edges;
            for (const auto& edge : spec.edges) {
                edges.emplace_back(edge.at(0) - 1, edge.at(1) - 1);
            }
            MatroidOracle m = rank_from_graphic_matroid(spec.vertices, edges);
            return Polymatroid{std::move(m.rank), "graphic"};
        }
        case RankSpec::Type::Dual:
            return dual_polymatroid(build_polymatroid(spec.children.at(0)));
        case RankSpec::Type::Translate:
            return translate_rank(build_polymatroid(spec.children.at(0)), spec.by);
        case RankSpec::Type::Permute:
            return permute_rank(build_polymatroid(spec.children.at(0)), spec.perm);
        case RankSpec::Type::Sum: {
            std::vector<Polymatroid> parts;
            for (const RankSpec& child : spec.children) {
                parts.push_back(build_polymatroid(child));
            }
            return sum_ranks(parts);
        }
        case RankSpec::Type::Truncate:
            return truncate_rank(build_polymatroid(spec.children.at(0)), spec.cap);
    }
    throw std::logic_error("unhandled rank spec type");
}

std::vector<long long> spec_rank_table(const RankSpec& spec) {
    switch (spec.type) {
        case RankSpec::Type::Explicit:
            return spec.values;
        case RankSpec::Type::Hypergraph:
        case RankSpec::Type::Uniform:
        case RankSpec::Type::Graphic:
            // Always axiom-valid once the combinatorial input checks pass.
            return build_polymatroid(spec).rank.values;
        case RankSpec::Type::Dual: {
            const std::vector<long long> child = spec_rank_table(spec.children.at(0));
            const SubsetMask full = static_cast<SubsetMask>(child.size() - 1);
            std::vector<long long> out(child.size());
            for (SubsetMask s = 0; s < child.size(); ++s) {
                out[s] = child[full & ~s] - child[full];
            }
            return out;
        }
        case RankSpec::Type::Translate: {
            std::vector<long long> out = spec_rank_table(spec.children.at(0));
            if (spec.by.size() != static_cast<std::size_t>(spec.children.at(0).n())) {
                throw std::invalid_argument("translation vector length mismatch");
            }
            std::vector<long long> shift(out.size(), 0);
            for (SubsetMask s = 1; s < out.size(); ++s) {
                shift[s] = shift[s & (s - 1)] +
                           spec.by[static_cast<std::size_t>(std::countr_zero(s))];
                out[s] += shift[s];
            }
            return out;
        }
        case RankSpec::Type::Permute: {
            const std::vector<long long> child = spec_rank_table(spec.children.at(0));
            const int n = spec.children.at(0).n();
            if (spec.perm.size() != static_cast<std::size_t>(n)) {
                throw std::invalid_argument("permutation length mismatch");
            }
            std::vector<long long> out(child.size());
            for (SubsetMask s = 0; s < child.size(); ++s) {
                SubsetMask image = 0;
                for (int i = 1; i <= n; ++i) {
                    if (mask_contains(s, i)) {
                        const int target = spec.perm[static_cast<std::size_t>(i) - 1];
                        if (target < 1 || target > n) {
                            throw std::invalid_argument("permutation entry out of range");
                        }
                        image |= element_bit(target);
                    }
                }
                out[image] = child[s];
            }
            return out;
        }
        case RankSpec::Type::Sum: {
            std::vector<long long> out = spec_rank_table(spec.children.at(0));
            for (std::size_t k = 1; k < spec.children.size(); ++k) {
                const std::vector<long long> part = spec_rank_table(spec.children[k]);
                if (part.size() != out.size()) {
                    throw std::invalid_argument("sum requires equal ground sizes");
                }
                for (std::size_t s = 0; s < out.size(); ++s) out[s] += part[s];
            }
            return out;
        }
        case RankSpec::Type::Truncate: {
            std::vector<long long> out = spec_rank_table(spec.children.at(0));
            for (long long& v : out) v = std::min(v, spec.cap);
            return out;
        }
    }
    throw std::logic_error("unhandled rank spec type");
}

Hypergraph hypergraph_from_spec(const RankSpec& spec) {
    if (spec.type != RankSpec::Type::Hypergraph) {
        throw std::invalid_argument("not a hypergraph recipe");
    }
    Hypergraph h;
    h.vertexCount = spec.vertices;
    for (const auto& edge : spec.edges) {
        std::vector<int> zeroBased;
        for (int v : edge) zeroBased.push_back(v - 1);
        h.edges.push_back(std::move(zeroBased));
    }
    return h;
}

std::pair<int, RankSpec> parse_instance_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.what() already carries "parse error at line L, column C: ...".
        throw std::invalid_argument(std::string("invalid instance: ") + e.what());
    }
    if (!doc.is_object()) fail_at("$", "expected a top-level object");
    check_keys(doc, {"n", "rank"}, "$");
    const int n = static_cast<int>(as_int_in(field(doc, "n", "$"), "$.n", 1, kMaxGroundSize));
    RankSpec spec = parse_spec(field(doc, "rank", "$"), "$.rank");
    if (spec.n() != n) {
        fail_at("$.n", "declared n=" + std::to_string(n) + " but the rank recipe describes n=" +
                           std::to_string(spec.n()));
    }
    return {n, std::move(spec)};
}

Instance parse_instance(const std::string& text) {
    auto [n, spec] = parse_instance_spec(text);
    (void)n;
    Polymatroid poly = build_polymatroid(spec);
    return Instance{std::move(spec), std::move(poly)};
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open instance file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

Instance parse_instance_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_instance(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::pair<int, RankSpec> parse_instance_spec_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_instance_spec(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

nlohmann::ordered_json spec_to_json(const RankSpec& spec) {
    nlohmann::ordered_json out;
    switch (spec.type) {
        case RankSpec::Type::Explicit:
            out["type"] = "explicit";
            out["values"] = spec.values;
            break;
        case RankSpec::Type::Hypergraph:
        case RankSpec::Type::Graphic:
            out["type"] = spec.type == RankSpec::Type::Hypergraph ? "hypergraph" : "graphic";
            out["vertices"] = spec.vertices;
            out["edges"] = spec.edges;
            break;
        case RankSpec::Type::Uniform:
            out["type"] = "uniform";
            out["n"] = spec.uniformN;
            out["r"] = spec.uniformR;
            break;
        case RankSpec::Type::Dual:
            out["type"] = "dual";
            out["of"] = spec_to_json(spec.children.at(0));
            break;
        case RankSpec::Type::Translate:
            out["type"] = "translate";
            out["of"] = spec_to_json(spec.children.at(0));
            out["by"] = spec.by;
            break;
        case RankSpec::Type::Permute:
            out["type"] = "permute";
            out["of"] = spec_to_json(spec.children.at(0));
            out["perm"] = spec.perm;
            break;
        case RankSpec::Type::Sum: {
            out["type"] = "sum";
            nlohmann::ordered_json parts = nlohmann::ordered_json::array();
            for (const RankSpec& child : spec.children) parts.push_back(spec_to_json(child));
            out["of"] = std::move(parts);
            break;
        }
        case RankSpec::Type::Truncate:
            out["type"] = "truncate";
            out["of"] = spec_to_json(spec.children.at(0));
            out["c"] = spec.cap;
            break;
    }
    return out;
}

nlohmann::ordered_json instance_to_json(const Instance& inst) {
    nlohmann::ordered_json out;
    out["n"] = inst.n();
    out["rank"] = spec_to_json(inst.spec);
    return out;
}

nlohmann::ordered_json poly_to_json(const BivariatePolynomial& poly) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [key, coeff] : poly.terms()) {
        out.push_back({key.first, key.second, coeff.get_str()});
    }
    return out;
}

nlohmann::ordered_json poly_to_json(const UnivariateRationalPolynomial& poly) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [degree, coeff] : poly.coeffs()) {
        out.push_back({degree, format_rational(coeff)});
    }
    return out;
}

}  // namespace pmtutte
