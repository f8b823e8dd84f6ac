#pragma once

#include <string>
#include <vector>

#include "cliffdkp/rational.hpp"

namespace cliffdkp {

/// Dense square matrix over the rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
    /// Throws DimensionError unless `rows` is square.
    explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

    static RationalMatrix identity(int n);

    int size() const { return n_; }
    Rational& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const Rational& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    /// 1-based row i as a vector.
    std::vector<Rational> row(int i) const;

    RationalMatrix transpose() const;
    bool is_symmetric() const;
    Rational determinant() const;
    /// Exact inverse by Gauss-Jordan; throws MetricError if singular.
    RationalMatrix inverse() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    /// "a,b;c,d" row-major.
    std::string str() const;

private:
    int n_ = 0;
    std::vector<Rational> a_;
};

/// Parses "identity" or a ";"-separated list of ","-separated rational rows.
/// Throws std::invalid_argument on malformed text.
RationalMatrix parse_matrix(const std::string& text, int n);

/// Symmetric invertible metric g on V with its cached inverse.
class Metric {
public:
    /// Throws MetricError if g is not symmetric or is singular.
    explicit Metric(RationalMatrix g);
    static Metric euclidean(int n) { return Metric(RationalMatrix::identity(n)); }

    int dim() const { return g_.size(); }
    const RationalMatrix& g() const { return g_; }
    const RationalMatrix& g_inv() const { return g_inv_; }

    /// Lowering: components of v-flat = g_ij v^j.
    std::vector<Rational> flat(const std::vector<Rational>& v) const;
    /// Raising: components of alpha-sharp = g^ij alpha_j.
    std::vector<Rational> sharp(const std::vector<Rational>& alpha) const;
    /// g(v, w)
    Rational pair(const std::vector<Rational>& v, const std::vector<Rational>& w) const;
    /// g^{-1}(alpha, beta)
    Rational pair_inv(const std::vector<Rational>& alpha, const std::vector<Rational>& beta) const;

    Metric negated() const { return Metric(-g_); }

private:
    RationalMatrix g_;
    RationalMatrix g_inv_;
};

/// Invertible frame matrix Lambda^mu_a (row mu, column a) and its inverse
/// (Lambda^{-1})^a_mu (row a, column mu).
class FrameMap {
public:
    /// Throws MetricError if singular.
    explicit FrameMap(RationalMatrix lambda);
    static FrameMap identity(int n) { return FrameMap(RationalMatrix::identity(n)); }

    int dim() const { return lambda_.size(); }
    const RationalMatrix& lambda() const { return lambda_; }
    const RationalMatrix& lambda_inv() const { return lambda_inv_; }

    /// Lambda^mu_a, 1-based.
    const Rational& at(int mu, int a) const { return lambda_(mu - 1, a - 1); }
    /// (Lambda^{-1})^a_mu, 1-based.
    const Rational& inv_at(int a, int mu) const { return lambda_inv_(a - 1, mu - 1); }

private:
    RationalMatrix lambda_;
    RationalMatrix lambda_inv_;
};

}  // namespace cliffdkp
