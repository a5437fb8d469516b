#ifndef MONOHIER_MULTIPOLY_HPP
#define MONOHIER_MULTIPOLY_HPP

#include "monohier/arith.hpp"

#include <map>
#include <sstream>
#include <string>

namespace monohier {

/// Sparse multivariate polynomial over the rationals, used as the scalar
/// ring for symbolic state evaluation: one indeterminate per marginal
/// moment. Variables are plain integer ids; a monomial maps id -> exponent.
class MultiPoly {
public:
    using Monomial = std::map<int, unsigned>;

    MultiPoly() = default;
    MultiPoly(int v) { *this = MultiPoly(Rational(v)); }  // ring-constant conversion
    explicit MultiPoly(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    static MultiPoly variable(int id) {
        MultiPoly p;
        p.terms_[Monomial{{id, 1}}] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree of a monomial = number of marginal factors, counted
    /// with multiplicity.
    static unsigned total_degree(const Monomial& mono) {
        unsigned d = 0;
        for (auto& [id, e] : mono) d += e;
        return d;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (auto& [id, e] : mb) m[id] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator-() const {
        MultiPoly r;
        for (auto& [mono, c] : terms_) r.terms_[mono] = -c;
        return r;
    }
    bool operator==(const MultiPoly&) const = default;
    bool operator!=(const MultiPoly&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [mono, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << format_rational(c);
            for (auto& [id, e] : mono) {
                os << "*v" << id;
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void add_term(const Monomial& mono, const Rational& c) {
        auto [it, inserted] = terms_.emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else if (c == 0) {
            terms_.erase(it);
        }
    }
    std::map<Monomial, Rational> terms_;
};

} // namespace monohier

#endif
