#include "cliffdkp/field_poly.hpp"

#include <algorithm>

#include "cliffdkp/error.hpp"

namespace cliffdkp {

namespace {
std::string bracket(int v) { return "[" + std::to_string(v) + "]"; }
std::string bracket(MultiIndex I) { return "[" + I.str() + "]"; }
}  // namespace

std::string FieldSymbol::str() const {
    switch (kind) {
    case SymbolKind::y: return "y" + bracket(index);
    case SymbolKind::pi: return "pi" + bracket(a) + bracket(index);
    case SymbolKind::p: return "p" + bracket(mu) + bracket(index);
    case SymbolKind::Dy: return "Dy" + bracket(mu) + bracket(index);
    case SymbolKind::Dpi: return "Dpi" + bracket(mu) + bracket(a) + bracket(index);
    case SymbolKind::Dp: return "Dp" + bracket(mu) + bracket(a) + bracket(index);
    }
    return "?";
}

Monomial::Monomial(const FieldSymbol& s, int exponent) {
    if (exponent > 0)
        factors_.emplace_back(s, exponent);
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& f : factors_)
        d += f.second;
    return d;
}

int Monomial::exponent(const FieldSymbol& s) const {
    for (const auto& [sym, e] : factors_)
        if (sym == s)
            return e;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first))
            r.factors_.push_back(*i++);
        else if (i == a.factors_.end() || j->first < i->first)
            r.factors_.push_back(*j++);
        else {
            r.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    return a.factors_ < b.factors_;
}

Monomial Monomial::without_one(const FieldSymbol& s) const {
    Monomial r = *this;
    for (auto it = r.factors_.begin(); it != r.factors_.end(); ++it)
        if (it->first == s) {
            if (--it->second == 0)
                r.factors_.erase(it);
            break;
        }
    return r;
}

std::string Monomial::str() const {
    std::string s;
    for (const auto& [sym, e] : factors_) {
        if (!s.empty())
            s += '*';
        s += sym.str();
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

FieldPoly::FieldPoly(const Rational& c) { add(Monomial(), c); }
FieldPoly::FieldPoly(const Monomial& m, const Rational& c) { add(m, c); }

void FieldPoly::add(const Monomial& m, const Rational& c) {
    if (cliffdkp::is_zero(c))
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (cliffdkp::is_zero(it->second))
            terms_.erase(it);
    }
}

int FieldPoly::degree() const {
    int d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.first.degree());
    return d;
}

std::set<FieldSymbol> FieldPoly::symbols() const {
    std::set<FieldSymbol> out;
    for (const auto& t : terms_)
        for (const auto& f : t.first.factors())
            out.insert(f.first);
    return out;
}

Rational FieldPoly::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

FieldPoly& FieldPoly::operator+=(const FieldPoly& o) {
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

FieldPoly& FieldPoly::operator-=(const FieldPoly& o) {
    for (const auto& [m, c] : o.terms_)
        add(m, Rational(-c));
    return *this;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    FieldPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add(ma * mb, Rational(ca * cb));
    return r;
}

FieldPoly& FieldPoly::operator*=(const FieldPoly& o) { return *this = *this * o; }

FieldPoly& FieldPoly::operator*=(const Rational& s) {
    if (cliffdkp::is_zero(s))
        terms_.clear();
    for (auto& t : terms_)
        t.second *= s;
    return *this;
}

FieldPoly FieldPoly::operator-() const {
    FieldPoly r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

FieldPoly FieldPoly::pow(unsigned e) const {
    FieldPoly r(1), base = *this;
    while (e) {
        if (e & 1u)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

std::string FieldPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        bool neg = sgn(c) < 0;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (m.is_constant())
            s += to_string(mag);
        else {
            if (mag != 1)
                s += to_string(mag) + "*";
            s += m.str();
        }
    }
    return s;
}

std::string coeff_text(const FieldPoly& f) {
    if (f.size() == 1 && sgn(f.terms().begin()->second) > 0)
        return f.str();
    return "(" + f.str() + ")";
}

FieldPoly partial(const FieldPoly& f, const FieldSymbol& s) {
    if (s.is_derivative())
        throw KindError("cannot differentiate with respect to derivative symbol " + s.str());
    FieldPoly r;
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(s);
        if (e)
            r += FieldPoly(m.without_one(s), Rational(c * e));
    }
    return r;
}

FieldPoly substitute(const FieldPoly& f,
                     const std::function<std::optional<FieldPoly>(const FieldSymbol&)>& rule) {
    std::map<FieldSymbol, std::optional<FieldPoly>> cache;
    FieldPoly r;
    for (const auto& [m, c] : f.terms()) {
        FieldPoly term(c);
        Monomial kept;
        for (const auto& [sym, e] : m.factors()) {
            auto it = cache.find(sym);
            if (it == cache.end())
                it = cache.emplace(sym, rule(sym)).first;
            if (it->second)
                term *= it->second->pow(static_cast<unsigned>(e));
            else
                kept = kept * Monomial(sym, e);
        }
        r += term * FieldPoly(kept, 1);
    }
    return r;
}

void check_symbols(const FieldPoly& f, int n, int p) {
    for (const auto& s : f.symbols()) {
        if (s.index.size() != p)
            throw RankError("symbol " + s.str() + " has rank " + std::to_string(s.index.size()) +
                            ", expected " + std::to_string(p));
        if (s.index.max_entry() > n)
            throw RangeError("symbol " + s.str() + " has an index above " + std::to_string(n));
        bool has_mu = s.kind == SymbolKind::p || s.is_derivative();
        bool has_a = s.kind == SymbolKind::pi || s.kind == SymbolKind::Dpi || s.kind == SymbolKind::Dp;
        if ((has_mu && (s.mu < 1 || s.mu > n)) || (has_a && (s.a < 1 || s.a > n)))
            throw RangeError("symbol " + s.str() + " has an index outside 1.." + std::to_string(n));
    }
}

}  // namespace cliffdkp
