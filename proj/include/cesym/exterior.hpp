#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cesym/matrix.hpp"

namespace cesym {

/// Ordered dual basis of a Lie algebra. The generator order is fixed for the
/// lifetime of a computation: it defines every Koszul sign and the volume
/// form e_1 ^ ... ^ e_n.
struct DualBasis {
    std::vector<std::string> names;

    DualBasis() = default;
    explicit DualBasis(std::vector<std::string> generator_names)
        : names(std::move(generator_names)) {
        std::set<std::string_view> seen;
        for (const auto& n : names) {
            if (n.empty()) throw std::invalid_argument("DualBasis: empty generator label");
            if (!seen.insert(n).second)
                throw std::invalid_argument("DualBasis: duplicate generator label '" + n + "'");
        }
    }

    std::size_t dimension() const { return names.size(); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const DualBasis&) const = default;
};

/// Strictly increasing tuple of generator indices naming a wedge monomial.
using IndexTuple = std::vector<int>;

inline Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Integer r = 1;
    for (std::size_t i = 0; i < std::min(k, n - k); ++i) {
        r *= Integer(n - i);
        r /= Integer(i + 1);
    }
    return r;
}

/// All C(n,k) strictly increasing k-tuples over {0..n-1} in lexicographic
/// order. Degree 0 is the single empty tuple.
inline std::vector<IndexTuple> degree_tuples(std::size_t n, std::size_t k) {
    if (k > n) throw std::out_of_range("degree_tuples: degree exceeds dimension");
    std::vector<IndexTuple> out;
    IndexTuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = static_cast<int>(i);
    while (true) {
        out.push_back(t);
        // next combination
        std::size_t i = k;
        while (i > 0 && t[i - 1] == static_cast<int>(n - k + i - 1)) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

/// Merges two strictly increasing tuples, counting the transpositions needed
/// to interleave them. Returns 0 on a shared index, otherwise +1/-1.
inline int merge_tuples(const IndexTuple& a, const IndexTuple& b, IndexTuple& merged) {
    merged.clear();
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += static_cast<long>(a.size() - i);
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

/// Homogeneous element of the exterior algebra over a DualBasis. Terms map
/// strictly increasing index tuples to nonzero rational coefficients; any
/// degree above the dimension is identically zero (no tuples exist).
class ExteriorForm {
public:
    ExteriorForm() = default;
    ExteriorForm(DualBasis basis, int degree) : basis_(std::move(basis)), degree_(degree) {
        if (degree < 0) throw std::invalid_argument("ExteriorForm: negative degree");
    }

    static ExteriorForm unit(DualBasis basis) {
        ExteriorForm f(std::move(basis), 0);
        f.terms_[IndexTuple{}] = 1;
        return f;
    }

    static ExteriorForm generator(DualBasis basis, std::size_t index) {
        if (index >= basis.dimension())
            throw std::out_of_range("ExteriorForm::generator: index out of range");
        ExteriorForm f(std::move(basis), 1);
        f.terms_[IndexTuple{static_cast<int>(index)}] = 1;
        return f;
    }

    static ExteriorForm term(DualBasis basis, IndexTuple tuple, Rational coefficient) {
        ExteriorForm f(std::move(basis), static_cast<int>(tuple.size()));
        f.set_coefficient(std::move(tuple), std::move(coefficient));
        return f;
    }

    const DualBasis& basis() const { return basis_; }
    int degree() const { return degree_; }
    const std::map<IndexTuple, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const IndexTuple& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set_coefficient(IndexTuple tuple, Rational c) {
        if (static_cast<int>(tuple.size()) != degree_)
            throw std::invalid_argument("ExteriorForm: tuple size does not match degree");
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] < 0 || tuple[i] >= static_cast<int>(basis_.dimension()))
                throw std::out_of_range("ExteriorForm: index out of range");
            if (i + 1 < tuple.size() && tuple[i] >= tuple[i + 1])
                throw std::invalid_argument("ExteriorForm: tuple not strictly increasing");
        }
        if (c == 0)
            terms_.erase(tuple);
        else
            terms_[std::move(tuple)] = std::move(c);
    }

    void add_term(const IndexTuple& tuple, const Rational& c) {
        auto it = terms_.find(tuple);
        if (it == terms_.end()) {
            if (c != 0) terms_[tuple] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    ExteriorForm operator-() const {
        ExteriorForm f(basis_, degree_);
        for (const auto& [t, c] : terms_) f.terms_[t] = -c;
        return f;
    }

    ExteriorForm operator+(const ExteriorForm& o) const {
        require_compatible(o);
        ExteriorForm f = *this;
        for (const auto& [t, c] : o.terms_) f.add_term(t, c);
        return f;
    }

    ExteriorForm operator-(const ExteriorForm& o) const { return *this + (-o); }

    ExteriorForm scaled(const Rational& s) const {
        ExteriorForm f(basis_, degree_);
        if (s == 0) return f;
        for (const auto& [t, c] : terms_) f.terms_[t] = c * s;
        return f;
    }

    bool operator==(const ExteriorForm&) const = default;

private:
    void require_compatible(const ExteriorForm& o) const {
        if (basis_ != o.basis_)
            throw std::invalid_argument("exterior forms over mismatched bases");
        if (degree_ != o.degree_)
            throw std::invalid_argument("exterior form degrees differ");
    }

    DualBasis basis_;
    int degree_ = 0;
    std::map<IndexTuple, Rational> terms_;
};

/// Wedge product. Bilinear, graded-commutative; signs come from counting the
/// transpositions that interleave the two index tuples.
inline ExteriorForm wedge(const ExteriorForm& f, const ExteriorForm& g) {
    if (f.basis() != g.basis())
        throw std::invalid_argument("wedge: mismatched bases");
    ExteriorForm out(f.basis(), f.degree() + g.degree());
    IndexTuple merged;
    for (const auto& [ta, ca] : f.terms()) {
        for (const auto& [tb, cb] : g.terms()) {
            const int sign = merge_tuples(ta, tb, merged);
            if (sign == 0) continue;
            Rational prod = ca * cb;
            if (sign < 0) prod = -prod;
            out.add_term(merged, prod);
        }
    }
    return out;
}

/// k-fold wedge power. Defined for any form when k <= 1; k-th powers of
/// odd-degree forms are refused for k > 1.
inline ExteriorForm power(const ExteriorForm& f, std::size_t k) {
    if (k == 0) return ExteriorForm::unit(f.basis());
    if (k > 1 && f.degree() % 2 != 0)
        throw std::invalid_argument("power: repeated wedge of an odd-degree form");
    ExteriorForm acc = f;
    for (std::size_t i = 1; i < k; ++i) acc = wedge(acc, f);
    return acc;
}

/// Coordinates of a degree-k form in the lexicographic tuple basis.
inline Vector to_vector(const ExteriorForm& f) {
    const auto tuples = degree_tuples(f.basis().dimension(), static_cast<std::size_t>(f.degree()));
    Vector v(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) v[i] = f.coefficient(tuples[i]);
    return v;
}

inline ExteriorForm form_from_vector(const DualBasis& basis, std::size_t k, const Vector& v) {
    const auto tuples = degree_tuples(basis.dimension(), k);
    if (v.size() != tuples.size())
        throw std::invalid_argument("form_from_vector: coordinate count mismatch");
    ExteriorForm f(basis, static_cast<int>(k));
    for (std::size_t i = 0; i < tuples.size(); ++i)
        if (v[i] != 0) f.set_coefficient(tuples[i], v[i]);
    return f;
}

/// Human-readable rendering, e.g. "alpha^delta + beta^gamma" or "-2 gamma^delta".
inline std::string format_form(const ExteriorForm& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : f.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) mono += "^";
            mono += f.basis().names[static_cast<std::size_t>(t[i])];
        }

        const Rational abs = c < 0 ? Rational(-c) : c;
        std::string body;
        if (mono.empty())
            body = format_rational(abs);
        else if (abs == 1)
            body = mono;
        else
            body = format_rational(abs) + " " + mono;

        if (first) {
            out += (c < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

} // namespace cesym
