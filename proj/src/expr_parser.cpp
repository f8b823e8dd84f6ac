#include "cliffdkp/expr_parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "cliffdkp/error.hpp"

namespace cliffdkp {

namespace {

class Parser {
public:
    Parser(std::string_view src, int n, int p) : src_(src), n_(n), p_(p) {}

    FieldPoly parse() {
        FieldPoly r = expr();
        skip_ws();
        if (pos_ != src_.size())
            fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::string(src_.substr(start, pos_ - start));
    }

    int small_nat() {
        std::size_t at = pos_;
        std::string d = digits();
        if (d.size() > 6) {
            pos_ = at;
            fail("number too large");
        }
        return std::stoi(d);
    }

    FieldPoly expr() {
        FieldPoly r = accept('-') ? -term() : term();
        while (true) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    FieldPoly term() {
        FieldPoly r = factor();
        while (accept('*'))
            r *= factor();
        return r;
    }

    FieldPoly factor() {
        FieldPoly base = primary();
        if (accept('^'))
            base = base.pow(static_cast<unsigned>(small_nat()));
        return base;
    }

    FieldPoly primary() {
        skip_ws();
        if (pos_ >= src_.size())
            fail("unexpected end of input");
        if (accept('('))
        {
            FieldPoly r = expr();
            expect(')');
            return r;
        }
        if (accept('-'))
            return -primary();
        if (peek_digit()) {
            Rational q(digits());
            if (accept('/')) {
                std::size_t at = pos_;
                Rational d(digits());
                if (is_zero(d)) {
                    pos_ = at;
                    fail("zero denominator");
                }
                q /= d;
            }
            return q;
        }
        return symbol();
    }

    std::string word() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    int one_index() {
        expect('[');
        std::size_t at = pos_;
        skip_ws();
        at = pos_;
        int v = small_nat();
        if (v < 1 || v > n_) {
            pos_ = at;
            throw RangeError("index " + std::to_string(v) + " outside 1.." + std::to_string(n_) +
                             " at byte " + std::to_string(at));
        }
        expect(']');
        return v;
    }

    // Returns the canonical index and its sign (0 on a repeated entry).
    SignedIndex multi_index() {
        expect('[');
        skip_ws();
        std::size_t at = pos_;
        std::vector<int> seq;
        if (!accept(']')) {
            do {
                skip_ws();
                std::size_t here = pos_;
                int v = small_nat();
                if (v < 1 || v > n_) {
                    pos_ = here;
                    throw RangeError("index " + std::to_string(v) + " outside 1.." + std::to_string(n_) +
                                     " at byte " + std::to_string(here));
                }
                seq.push_back(v);
            } while (accept(','));
            expect(']');
        }
        if (static_cast<int>(seq.size()) != p_)
            throw RankError("multi-index of length " + std::to_string(seq.size()) + " at byte " +
                            std::to_string(at) + ", expected rank " + std::to_string(p_));
        return canonicalize(seq, n_);
    }

    FieldPoly signed_symbol(const SignedIndex& si, FieldSymbol s) {
        if (!si)
            return FieldPoly();
        s.index = si.index;
        return Rational(si.sign) * FieldPoly::symbol(s);
    }

    // Trailing multi-index that may be left out at rank zero.
    SignedIndex optional_multi_index() {
        skip_ws();
        if (p_ == 0 && (pos_ >= src_.size() || src_[pos_] != '['))
            return {1, MultiIndex{}};
        return multi_index();
    }

    FieldPoly symbol() {
        std::size_t at = pos_;
        std::string w = word();
        if (w == "y")
            return signed_symbol(multi_index(), FieldSymbol::y({}));
        if (w == "pi") {
            int a = one_index();
            return signed_symbol(optional_multi_index(), FieldSymbol::pi(a, {}));
        }
        if (w == "p") {
            int mu = one_index();
            return signed_symbol(optional_multi_index(), FieldSymbol::p(mu, {}));
        }
        if (w == "Dy") {
            int mu = one_index();
            return signed_symbol(optional_multi_index(), FieldSymbol::Dy(mu, {}));
        }
        if (w == "Dpi") {
            int mu = one_index();
            int a = one_index();
            return signed_symbol(optional_multi_index(), FieldSymbol::Dpi(mu, a, {}));
        }
        if (w == "Dp") {
            int mu = one_index();
            int nu = one_index();
            return signed_symbol(optional_multi_index(), FieldSymbol::Dp(mu, nu, {}));
        }
        pos_ = at;
        if (w.empty())
            fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        fail("unknown symbol '" + w + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int n_;
    int p_;
};

}  // namespace

FieldPoly parse_expr(std::string_view src, int n, int p) {
    if (n < 1 || n > kMaxDim)
        throw RangeError("dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDim));
    if (p < 0 || p > n)
        throw RangeError("rank " + std::to_string(p) + " outside 0.." + std::to_string(n));
    return Parser(src, n, p).parse();
}

}  // namespace cliffdkp
