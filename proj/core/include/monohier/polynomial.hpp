#ifndef MONOHIER_POLYNOMIAL_HPP
#define MONOHIER_POLYNOMIAL_HPP

#include "monohier/arith.hpp"

#include <vector>

namespace monohier {

/// Dense univariate polynomial over a commutative ring R.
/// Coefficients are stored ascending; trailing zeros are stripped, so the
/// zero polynomial has an empty coefficient vector.
template <class R>
class PolynomialT {
public:
    PolynomialT() = default;
    explicit PolynomialT(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolynomialT constant(R v) { return PolynomialT(std::vector<R>{std::move(v)}); }
    static PolynomialT monomial(R v, std::size_t degree) {
        std::vector<R> c(degree + 1, R(0));
        c[degree] = std::move(v);
        return PolynomialT(std::move(c));
    }
    static PolynomialT identity() { return monomial(R(1), 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<R>& coefficients() const { return c_; }
    R coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
    R constant_term() const { return coefficient(0); }

    PolynomialT& operator+=(const PolynomialT& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    PolynomialT& operator-=(const PolynomialT& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    PolynomialT& operator*=(const R& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }
    friend PolynomialT operator+(PolynomialT a, const PolynomialT& b) { return a += b; }
    friend PolynomialT operator-(PolynomialT a, const PolynomialT& b) { return a -= b; }
    friend PolynomialT operator*(PolynomialT a, const R& s) { return a *= s; }
    friend PolynomialT operator*(const R& s, PolynomialT a) { return a *= s; }
    friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return PolynomialT(std::move(c));
    }
    PolynomialT operator-() const {
        PolynomialT r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    bool operator==(const PolynomialT&) const = default;

    template <class X>
    X evaluate(const X& x) const {
        X acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + X(c_[k]);
        return acc;
    }

    /// Antiderivative with zero constant term (requires division by integers).
    PolynomialT antiderivative() const {
        std::vector<R> c(c_.size() + 1, R(0));
        for (std::size_t k = 0; k < c_.size(); ++k) c[k + 1] = c_[k] / R(static_cast<int>(k) + 1);
        return PolynomialT(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }
    std::vector<R> c_;
};

using Polynomial = PolynomialT<Rational>;

} // namespace monohier

#endif
