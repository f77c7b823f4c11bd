#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cesym/action.hpp"

namespace cesym {

using json = nlohmann::ordered_json;

/// One term of a generator's differential: coefficient * xi_i ^ xi_j with
/// i strictly before j in generator order.
struct DifferentialTerm {
    Rational coefficient;
    std::string left, right;

    bool operator==(const DifferentialTerm&) const = default;
};

/// The on-disk presentation of an algebra (plus optional action): ordered
/// generator labels, the degree-1 differentials, action generator matrices,
/// and free-form metadata carried through verbatim.
struct AlgebraFile {
    std::string name;
    std::vector<std::string> generators;
    std::vector<std::pair<std::string, std::vector<DifferentialTerm>>> differential;
    std::vector<Matrix> action_generators;
    json metadata = json::object();

    bool operator==(const AlgebraFile& o) const {
        return name == o.name && generators == o.generators && differential == o.differential &&
               action_generators == o.action_generators && metadata == o.metadata;
    }

    DualBasis basis() const { return DualBasis(generators); }

    /// Rebuilds the Lie algebra, validating d^2 = 0 on every generator.
    LieAlgebra to_lie_algebra() const {
        const DualBasis b = basis();
        std::map<std::string, ExteriorForm> diffs;
        for (const auto& [gen, terms] : differential) {
            ExteriorForm f(b, 2);
            for (const auto& t : terms) {
                const auto i = b.index_of(t.left), j = b.index_of(t.right);
                if (!i || !j || *i >= *j)
                    throw ParseError("differential." + gen + ": bad term '" + t.left + "','" +
                                     t.right + "'");
                f.add_term(IndexTuple{static_cast<int>(*i), static_cast<int>(*j)}, t.coefficient);
            }
            diffs.emplace(gen, std::move(f));
        }
        return from_dual_presentation(b, diffs);
    }

    bool has_action() const { return !action_generators.empty(); }

    ActionGenerators to_action() const {
        return ActionGenerators(action_generators, generators.size());
    }
};

namespace detail {

inline Rational parse_rational_value(const json& v, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.get<std::int64_t>()));
    throw ParseError(where + ": expected integer or \"p/q\" string");
}

} // namespace detail

/// Parses and structurally validates an AlgebraFile document. Error messages
/// name the offending field.
inline AlgebraFile parse_algebra_file(const json& doc) {
    if (!doc.is_object()) throw ParseError("algebra file: top level must be a JSON object");
    AlgebraFile f;

    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw ParseError("generators: required array of labels");
    for (const auto& g : doc["generators"]) {
        if (!g.is_string()) throw ParseError("generators: labels must be strings");
        f.generators.push_back(g.get<std::string>());
    }
    DualBasis basis;
    try {
        basis = DualBasis(f.generators);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("generators: ") + e.what());
    }

    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("name: must be a string");
        f.name = doc["name"].get<std::string>();
    }

    auto generator_index = [&](const std::string& label, const std::string& where) {
        const auto idx = basis.index_of(label);
        if (!idx) throw ParseError(where + ": unknown generator '" + label + "'");
        return *idx;
    };

    if (doc.contains("differential")) {
        if (!doc["differential"].is_object())
            throw ParseError("differential: must be an object keyed by generator");
        for (const auto& [gen, terms] : doc["differential"].items()) {
            generator_index(gen, "differential");
            const std::string where = "differential." + gen;
            if (!terms.is_array()) throw ParseError(where + ": expected an array of terms");
            std::vector<DifferentialTerm> parsed;
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const std::string tw = where + "[" + std::to_string(t) + "]";
                const json& term = terms[t];
                if (!term.is_array() || term.size() != 3)
                    throw ParseError(tw + ": expected [coefficient, generator, generator]");
                DifferentialTerm dt;
                dt.coefficient = detail::parse_rational_value(term[0], tw + "[0]");
                if (!term[1].is_string() || !term[2].is_string())
                    throw ParseError(tw + ": generators must be strings");
                dt.left = term[1].get<std::string>();
                dt.right = term[2].get<std::string>();
                const std::size_t i = generator_index(dt.left, tw);
                const std::size_t j = generator_index(dt.right, tw);
                if (i >= j)
                    throw ParseError(tw + ": generators must appear in basis order (got '" +
                                     dt.left + "', '" + dt.right + "')");
                parsed.push_back(std::move(dt));
            }
            if (!parsed.empty()) f.differential.emplace_back(gen, std::move(parsed));
        }
    }

    if (doc.contains("action_generators")) {
        const std::size_t n = f.generators.size();
        if (!doc["action_generators"].is_array())
            throw ParseError("action_generators: must be an array of matrices");
        for (std::size_t m = 0; m < doc["action_generators"].size(); ++m) {
            const std::string where = "action_generators[" + std::to_string(m) + "]";
            const json& mat = doc["action_generators"][m];
            if (!mat.is_array()) throw ParseError(where + ": expected a matrix");
            Matrix g(n, n);
            if (mat.size() == n * n && (n == 0 || !mat[0].is_array())) {
                for (std::size_t e = 0; e < n * n; ++e) // row-major flat layout
                    g(e / n, e % n) = detail::parse_rational_value(
                        mat[e], where + "[" + std::to_string(e) + "]");
            } else if (mat.size() == n) {
                for (std::size_t r = 0; r < n; ++r) {
                    if (!mat[r].is_array() || mat[r].size() != n)
                        throw ParseError(where + "[" + std::to_string(r) + "]: expected a row of " +
                                         std::to_string(n) + " entries");
                    for (std::size_t c = 0; c < n; ++c)
                        g(r, c) = detail::parse_rational_value(
                            mat[r][c],
                            where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
                }
            } else {
                throw ParseError(where + ": expected " + std::to_string(n) + "x" +
                                 std::to_string(n) + " matrix (rows or row-major flat)");
            }
            f.action_generators.push_back(std::move(g));
        }
    }

    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) throw ParseError("metadata: must be an object");
        f.metadata = doc["metadata"];
    }
    return f;
}

inline AlgebraFile parse_algebra_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("algebra file: ") + e.what());
    }
    return parse_algebra_file(doc);
}

// string literals would otherwise be ambiguous against the json overload
inline AlgebraFile parse_algebra_file(const char* text) {
    return parse_algebra_file(std::string(text));
}

/// Canonical serialization: generator order everywhere, differential terms
/// sorted by index pair, matrices as nested rows, rationals as strings.
inline json serialize_algebra_file(const AlgebraFile& f) {
    json doc = json::object();
    doc["name"] = f.name;
    doc["generators"] = f.generators;

    const DualBasis basis(f.generators);
    json diff = json::object();
    for (const auto& label : f.generators) {
        for (const auto& [gen, terms] : f.differential) {
            if (gen != label || terms.empty()) continue;
            auto sorted = terms;
            std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
                return std::pair(basis.index_of(a.left), basis.index_of(a.right)) <
                       std::pair(basis.index_of(b.left), basis.index_of(b.right));
            });
            json arr = json::array();
            for (const auto& t : sorted)
                arr.push_back(json::array({format_rational(t.coefficient), t.left, t.right}));
            diff[gen] = std::move(arr);
        }
    }
    doc["differential"] = std::move(diff);

    if (!f.action_generators.empty()) {
        json mats = json::array();
        for (const Matrix& g : f.action_generators) {
            json rows = json::array();
            for (std::size_t r = 0; r < g.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < g.cols(); ++c)
                    row.push_back(format_rational(g(r, c)));
                rows.push_back(std::move(row));
            }
            mats.push_back(std::move(rows));
        }
        doc["action_generators"] = std::move(mats);
    }

    if (!f.metadata.empty()) doc["metadata"] = f.metadata;
    return doc;
}

/// FNV-1a 64-bit digest of the canonical serialization; stable across runs
/// and platforms, used to key reports to their exact input.
inline std::string digest_algebra_file(const AlgebraFile& f) {
    const std::string text = serialize_algebra_file(f).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

} // namespace cesym
