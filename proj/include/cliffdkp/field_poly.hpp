#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cliffdkp/multi_index.hpp"
#include "cliffdkp/rational.hpp"

namespace cliffdkp {

/// Field variables and the formal first derivatives that appear in the
/// field equations:
///   y[I]           y^I
///   pi[a][I]       pi^a_I
///   p[mu][I]       polymomentum p^mu_I
///   Dy[mu][I]      d_mu y^I
///   Dpi[mu][a][I]  d_mu pi^a_I
///   Dp[mu][nu][I]  d_mu p^nu_I
/// Derivative kinds are inert: they are never differentiated.
enum class SymbolKind : std::uint8_t { y, pi, p, Dy, Dpi, Dp };

struct FieldSymbol {
    SymbolKind kind = SymbolKind::y;
    std::uint8_t mu = 0;  // spacetime index (p, Dy, Dpi, Dp)
    std::uint8_t a = 0;   // Latin index (pi, Dpi) or second spacetime index (Dp)
    MultiIndex index;

    static FieldSymbol y(MultiIndex I) { return {SymbolKind::y, 0, 0, I}; }
    static FieldSymbol pi(int a, MultiIndex I) { return {SymbolKind::pi, 0, u8(a), I}; }
    static FieldSymbol p(int mu, MultiIndex I) { return {SymbolKind::p, u8(mu), 0, I}; }
    static FieldSymbol Dy(int mu, MultiIndex I) { return {SymbolKind::Dy, u8(mu), 0, I}; }
    static FieldSymbol Dpi(int mu, int a, MultiIndex I) { return {SymbolKind::Dpi, u8(mu), u8(a), I}; }
    static FieldSymbol Dp(int mu, int nu, MultiIndex I) { return {SymbolKind::Dp, u8(mu), u8(nu), I}; }

    bool is_derivative() const { return kind >= SymbolKind::Dy; }

    friend auto operator<=>(const FieldSymbol& x, const FieldSymbol& z) {
        if (x.kind != z.kind)
            return x.kind <=> z.kind;
        if (x.mu != z.mu)
            return x.mu <=> z.mu;
        if (x.a != z.a)
            return x.a <=> z.a;
        if (x.index == z.index)
            return std::strong_ordering::equal;
        return x.index < z.index ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    friend bool operator==(const FieldSymbol&, const FieldSymbol&) = default;

    std::string str() const;

private:
    static std::uint8_t u8(int v) { return static_cast<std::uint8_t>(v); }
};

/// Product of symbol powers, factors sorted by symbol, exponents positive.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const FieldSymbol& s, int exponent = 1);

    const std::vector<std::pair<FieldSymbol, int>>& factors() const { return factors_; }
    int degree() const;
    int exponent(const FieldSymbol& s) const;
    bool is_constant() const { return factors_.empty(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Higher total degree first, then lexicographic on factors.
    friend bool operator<(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// The monomial with one power of s removed (s must divide it).
    Monomial without_one(const FieldSymbol& s) const;

    std::string str() const;

private:
    std::vector<std::pair<FieldSymbol, int>> factors_;
};

/// Multivariate polynomial with rational coefficients over FieldSymbols.
class FieldPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    FieldPoly() = default;
    FieldPoly(const Rational& c);  // NOLINT: constants convert implicitly
    FieldPoly(int c) : FieldPoly(Rational(c)) {}
    static FieldPoly symbol(const FieldSymbol& s) { return FieldPoly(Monomial(s), 1); }
    FieldPoly(const Monomial& m, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const;
    std::set<FieldSymbol> symbols() const;
    /// Constant coefficient.
    Rational constant_term() const;

    FieldPoly& operator+=(const FieldPoly& o);
    FieldPoly& operator-=(const FieldPoly& o);
    FieldPoly& operator*=(const FieldPoly& o);
    FieldPoly& operator*=(const Rational& s);
    FieldPoly operator-() const;

    friend FieldPoly operator+(FieldPoly a, const FieldPoly& b) { return a += b; }
    friend FieldPoly operator-(FieldPoly a, const FieldPoly& b) { return a -= b; }
    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
    friend FieldPoly operator*(const Rational& s, FieldPoly a) { return a *= s; }
    friend FieldPoly operator*(FieldPoly a, const Rational& s) { return a *= s; }
    friend FieldPoly operator*(int s, FieldPoly a) { return a *= Rational(s); }
    friend FieldPoly operator*(FieldPoly a, int s) { return a *= Rational(s); }
    friend bool operator==(const FieldPoly&, const FieldPoly&) = default;

    FieldPoly pow(unsigned e) const;

    /// Human-readable form accepted back by parse_expr.
    std::string str() const;

private:
    void add(const Monomial& m, const Rational& c);
    Terms terms_;
};

inline bool is_zero(const FieldPoly& f) { return f.is_zero(); }
inline std::string to_string(const FieldPoly& f) { return f.str(); }
/// Coefficient text inside element printouts: parenthesized when compound.
std::string coeff_text(const FieldPoly& f);

/// Formal partial derivative. Throws KindError for derivative symbols.
FieldPoly partial(const FieldPoly& f, const FieldSymbol& s);

/// Replaces every symbol for which `rule` returns a polynomial.
FieldPoly substitute(const FieldPoly& f, const std::function<std::optional<FieldPoly>(const FieldSymbol&)>& rule);

/// Throws RankError / RangeError unless every symbol has |I| = p and all
/// indices lie in 1..n.
void check_symbols(const FieldPoly& f, int n, int p);

}  // namespace cliffdkp
