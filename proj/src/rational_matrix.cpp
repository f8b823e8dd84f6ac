#include "cliffdkp/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "cliffdkp/error.hpp"

namespace cliffdkp {

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : RationalMatrix(static_cast<int>(rows.size())) {
    for (int r = 0; r < n_; ++r) {
        if (static_cast<int>(rows[r].size()) != n_)
            throw DimensionError("matrix is not square");
        for (int c = 0; c < n_; ++c)
            (*this)(r, c) = rows[r][c];
    }
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<Rational> RationalMatrix::row(int i) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(i - 1) * n_,
            a_.begin() + static_cast<std::ptrdiff_t>(i) * n_};
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool RationalMatrix::is_symmetric() const {
    for (int r = 0; r < n_; ++r)
        for (int c = r + 1; c < n_; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

Rational RationalMatrix::determinant() const {
    RationalMatrix m = *this;
    Rational det = 1;
    for (int col = 0; col < n_; ++col) {
        int piv = col;
        while (piv < n_ && is_zero(m(piv, col)))
            ++piv;
        if (piv == n_)
            return 0;
        if (piv != col) {
            for (int c = 0; c < n_; ++c)
                std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n_; ++r) {
            if (is_zero(m(r, col)))
                continue;
            Rational f = m(r, col) / m(col, col);
            for (int c = col; c < n_; ++c)
                m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

RationalMatrix RationalMatrix::inverse() const {
    RationalMatrix m = *this;
    RationalMatrix inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int piv = col;
        while (piv < n_ && is_zero(m(piv, col)))
            ++piv;
        if (piv == n_)
            throw MetricError("matrix is singular");
        if (piv != col)
            for (int c = 0; c < n_; ++c) {
                std::swap(m(piv, c), m(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        Rational d = m(col, col);
        for (int c = 0; c < n_; ++c) {
            m(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || is_zero(m(r, col)))
                continue;
            Rational f = m(r, col);
            for (int c = 0; c < n_; ++c) {
                m(r, c) -= f * m(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.n_ != b.n_)
        throw DimensionError("matrix sizes differ");
    RationalMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            if (is_zero(a(i, k)))
                continue;
            for (int j = 0; j < a.n_; ++j)
                r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

RationalMatrix operator-(const RationalMatrix& a) {
    RationalMatrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        r.a_[i] = -a.a_[i];
    return r;
}

std::string RationalMatrix::str() const {
    std::string s;
    for (int r = 0; r < n_; ++r) {
        if (r)
            s += ';';
        for (int c = 0; c < n_; ++c) {
            if (c)
                s += ',';
            s += to_string((*this)(r, c));
        }
    }
    return s;
}

RationalMatrix parse_matrix(const std::string& text, int n) {
    if (text == "identity")
        return RationalMatrix::identity(n);
    std::vector<std::vector<Rational>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<Rational> vals;
        std::stringstream cs(row);
        std::string cell;
        while (std::getline(cs, cell, ',')) {
            auto b = cell.find_first_not_of(" \t");
            auto e = cell.find_last_not_of(" \t");
            vals.push_back(parse_rational(b == std::string::npos ? "" : cell.substr(b, e - b + 1)));
        }
        rows.push_back(std::move(vals));
    }
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix '" + text + "' does not have " + std::to_string(n) + " rows");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("matrix '" + text + "' is not " + std::to_string(n) + "x" +
                                        std::to_string(n));
    return RationalMatrix(rows);
}

Metric::Metric(RationalMatrix g) : g_(std::move(g)) {
    if (!g_.is_symmetric())
        throw MetricError("metric is not symmetric");
    g_inv_ = g_.inverse();
}

namespace {
std::vector<Rational> apply(const RationalMatrix& m, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != m.size())
        throw DimensionError("vector length does not match metric dimension");
    std::vector<Rational> out(v.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            out[i] += m(i, j) * v[j];
    return out;
}
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}
}  // namespace

std::vector<Rational> Metric::flat(const std::vector<Rational>& v) const { return apply(g_, v); }
std::vector<Rational> Metric::sharp(const std::vector<Rational>& alpha) const { return apply(g_inv_, alpha); }
Rational Metric::pair(const std::vector<Rational>& v, const std::vector<Rational>& w) const {
    return dot(v, flat(w));
}
Rational Metric::pair_inv(const std::vector<Rational>& alpha, const std::vector<Rational>& beta) const {
    return dot(alpha, sharp(beta));
}

FrameMap::FrameMap(RationalMatrix lambda) : lambda_(std::move(lambda)) {
    lambda_inv_ = lambda_.inverse();
}

}  // namespace cliffdkp
