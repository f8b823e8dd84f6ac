#pragma once

#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cliffdkp/error.hpp"
#include "cliffdkp/multi_index.hpp"
#include "cliffdkp/rational.hpp"

namespace cliffdkp {

namespace detail {
// Unqualified so that ADL finds is_zero for coefficient types declared later.
template <class C>
bool coeff_is_zero(const C& c) {
    return is_zero(c);
}
}  // namespace detail

/// One projector-basis element (e^{j1})...(e^{jp})(P)(e_{kq})...(e_{k1}),
/// keyed by the increasing tuples J = upper and K = lower.
struct BasisElement {
    MultiIndex upper;
    MultiIndex lower;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
    /// Order on (|J|, |K|, J, K).
    friend bool operator<(const BasisElement& a, const BasisElement& b) {
        if (a.upper.size() != b.upper.size())
            return a.upper.size() < b.upper.size();
        if (a.lower.size() != b.lower.size())
            return a.lower.size() < b.lower.size();
        if (!(a.upper == b.upper))
            return a.upper < b.upper;
        return a.lower < b.lower;
    }

    /// "E[1,3|2]"
    std::string str() const { return "E[" + upper.str() + "|" + lower.str() + "]"; }
};

/// Sparse linear combination of basis elements of G_n with coefficients in C.
///
/// C is either Rational or a polynomial ring over the rationals. No stored
/// coefficient is ever zero.
template <class C>
class Element {
public:
    using Coeff = C;
    using Terms = std::map<BasisElement, C>;

    explicit Element(int n = 0) : n_(n) {}
    Element(int n, const BasisElement& b, C c) : n_(n) { add_term(b, std::move(c)); }

    int dim() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coefficient(const BasisElement& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? C() : it->second;
    }

    void add_term(const BasisElement& b, const C& c) {
        if (is_zero_coeff(c))
            return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second))
                terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        check_same(o);
        for (const auto& [b, c] : o.terms_)
            add_term(b, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        check_same(o);
        for (const auto& [b, c] : o.terms_)
            add_term(b, C(-c));
        return *this;
    }
    Element operator-() const {
        Element r(n_);
        for (const auto& [b, c] : terms_)
            r.terms_.emplace(b, C(-c));
        return r;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    Element& operator*=(const Rational& s) {
        if (cliffdkp::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_)
            c *= s;
        return *this;
    }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    void check_same(const Element& o) const {
        if (n_ != o.n_)
            throw DimensionError("elements of G_" + std::to_string(n_) + " and G_" +
                                 std::to_string(o.n_) + " mixed");
    }

private:
    static bool is_zero_coeff(const C& c) { return detail::coeff_is_zero(c); }

    int n_;
    Terms terms_;
};

namespace detail {
template <class A, class B>
using product_coeff_t = std::conditional_t<std::is_same_v<A, Rational>, B, A>;
}

/// Algebra product. On basis elements this is the matrix-unit rule
/// E(J,K) E(J',K') = [K = J'] E(J,K'), extended bilinearly.
template <class A, class B>
Element<detail::product_coeff_t<A, B>> mul(const Element<A>& a, const Element<B>& b) {
    using R = detail::product_coeff_t<A, B>;
    if (a.dim() != b.dim())
        throw DimensionError("product of elements of G_" + std::to_string(a.dim()) + " and G_" +
                             std::to_string(b.dim()));
    std::map<MultiIndex, std::vector<const typename Element<B>::Terms::value_type*>> by_upper;
    for (const auto& t : b.terms())
        by_upper[t.first.upper].push_back(&t);
    Element<R> out(a.dim());
    for (const auto& [ka, ca] : a.terms()) {
        auto it = by_upper.find(ka.lower);
        if (it == by_upper.end())
            continue;
        for (const auto* tb : it->second)
            out.add_term({ka.upper, tb->first.lower}, R(ca * tb->second));
    }
    return out;
}

template <class A, class B>
auto operator*(const Element<A>& a, const Element<B>& b) {
    return mul(a, b);
}

/// Full contraction C_(p): E(J,K) with |J| = |K| = p goes to [J = K] (P).
/// Throws GradeError on any term of another grade.
template <class C>
Element<C> contract(const Element<C>& a, int p) {
    if (p < 0 || p > a.dim())
        throw RangeError("contraction rank " + std::to_string(p) + " outside 0.." +
                         std::to_string(a.dim()));
    C s{};
    for (const auto& [b, c] : a.terms()) {
        if (b.upper.size() != p || b.lower.size() != p)
            throw GradeError("contraction of rank " + std::to_string(p) + " applied to " + b.str());
        if (b.upper == b.lower)
            s += c;
    }
    return Element<C>(a.dim(), BasisElement{}, s);
}

/// Scalar multiple of (P) carried by `a`, i.e. its E[|] coefficient.
template <class C>
C scalar_part(const Element<C>& a) {
    return a.coefficient(BasisElement{});
}

inline std::string coeff_text(const Rational& q) { return to_string(q); }

/// Canonical text: "c * E[J|K]" terms joined by " + " in basis order; "0" if empty.
template <class C>
std::string to_string(const Element<C>& a) {
    if (a.is_zero())
        return "0";
    std::string s;
    for (const auto& [b, c] : a.terms()) {
        if (!s.empty())
            s += " + ";
        s += coeff_text(c);
        s += " * ";
        s += b.str();
    }
    return s;
}

}  // namespace cliffdkp
