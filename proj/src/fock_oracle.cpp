#include "cliffdkp/fock_oracle.hpp"

#include <bit>

#include "cliffdkp/error.hpp"

namespace cliffdkp {

DenseOperator::DenseOperator(int n) : n_(n), side_(1 << n), a_(static_cast<std::size_t>(side_) * side_) {
    if (n < 0 || n > 8)
        throw RangeError("Fock oracle supports n <= 8");
}

DenseOperator DenseOperator::identity(int n) {
    DenseOperator m(n);
    for (FockState s = 0; s < static_cast<FockState>(m.side_); ++s)
        m(s, s) = 1;
    return m;
}

DenseOperator DenseOperator::transpose() const {
    DenseOperator t(n_);
    for (int r = 0; r < side_; ++r)
        for (int c = 0; c < side_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool DenseOperator::is_zero() const {
    for (const auto& x : a_)
        if (!cliffdkp::is_zero(x))
            return false;
    return true;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
    if (a.n_ != b.n_)
        throw DimensionError("operator sizes differ");
    DenseOperator r(a.n_);
    const int s = a.side_;
    for (int i = 0; i < s; ++i)
        for (int k = 0; k < s; ++k) {
            const Rational& aik = a(i, k);
            if (cliffdkp::is_zero(aik))
                continue;
            for (int j = 0; j < s; ++j)
                if (!cliffdkp::is_zero(b(k, j)))
                    r(i, j) += aik * b(k, j);
        }
    return r;
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
    if (a.n_ != b.n_)
        throw DimensionError("operator sizes differ");
    DenseOperator r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i)
        r.a_[i] += b.a_[i];
    return r;
}

DenseOperator operator*(const Rational& s, const DenseOperator& a) {
    DenseOperator r = a;
    for (auto& x : r.a_)
        x *= s;
    return r;
}

namespace {

int fermion_sign(FockState s, int i) {
    return (std::popcount(s & ((1u << (i - 1)) - 1u)) % 2) ? -1 : 1;
}

// Applies a_i (or a^dag_i) to a state vector.
std::vector<Rational> apply_mode(GeneratorKind kind, int i, const std::vector<Rational>& v) {
    std::vector<Rational> out(v.size());
    const FockState bit = 1u << (i - 1);
    for (FockState s = 0; s < v.size(); ++s) {
        if (is_zero(v[s]))
            continue;
        bool occupied = s & bit;
        if (kind == GeneratorKind::covector && !occupied)
            out[s | bit] += fermion_sign(s, i) * v[s];
        else if (kind == GeneratorKind::vector && occupied)
            out[s & ~bit] += fermion_sign(s, i) * v[s];
    }
    return out;
}

}  // namespace

DenseOperator represent_generator(GeneratorKind kind, int index, int n) {
    if (index < 1 || index > n)
        throw RangeError("mode index " + std::to_string(index) + " outside 1.." + std::to_string(n));
    DenseOperator m(n);
    const FockState bit = 1u << (index - 1);
    for (FockState s = 0; s < static_cast<FockState>(m.side()); ++s) {
        bool occupied = s & bit;
        if (kind == GeneratorKind::covector && !occupied)
            m(s | bit, s) = fermion_sign(s, index);
        else if (kind == GeneratorKind::vector && occupied)
            m(s & ~bit, s) = fermion_sign(s, index);
    }
    return m;
}

DenseOperator represent(const BasisElement& b, int n) {
    DenseOperator m(n);
    const std::size_t side = std::size_t{1} << n;
    // ket = a^dag_{j1} .. a^dag_{jp} |0>
    std::vector<Rational> ket(side);
    ket[0] = 1;
    auto js = b.upper.entries();
    for (auto it = js.rbegin(); it != js.rend(); ++it)
        ket = apply_mode(GeneratorKind::covector, *it, ket);
    // bra = <0| a_{kq} .. a_{k1}, i.e. the transpose of a^dag_{k1} .. a^dag_{kq} |0>
    std::vector<Rational> bra(side);
    bra[0] = 1;
    auto ks = b.lower.entries();
    for (auto it = ks.rbegin(); it != ks.rend(); ++it)
        bra = apply_mode(GeneratorKind::covector, *it, bra);
    for (FockState r = 0; r < side; ++r) {
        if (is_zero(ket[r]))
            continue;
        for (FockState c = 0; c < side; ++c)
            if (!is_zero(bra[c]))
                m(r, c) = ket[r] * bra[c];
    }
    return m;
}

DenseOperator represent(const AlgebraElement& a) {
    const int n = a.dim();
    DenseOperator m(n);
    for (const auto& [b, c] : a.terms()) {
        DenseOperator u = represent(b, n);
        for (FockState r = 0; r < static_cast<FockState>(m.side()); ++r)
            for (FockState s = 0; s < static_cast<FockState>(m.side()); ++s)
                if (!is_zero(u(r, s)))
                    m(r, s) += c * u(r, s);
    }
    return m;
}

}  // namespace cliffdkp
