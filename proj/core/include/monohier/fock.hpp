#ifndef MONOHIER_FOCK_HPP
#define MONOHIER_FOCK_HPP

#include "monohier/arith.hpp"
#include "monohier/level.hpp"
#include "monohier/partitions.hpp"
#include "monohier/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace monohier::fock {

using partitions::IntervalIndicator;
using partitions::PairPartition;
using partitions::SupportProfile;

/// Piecewise polynomial with rational breakpoints; each piece lives on the
/// half-open interval (b_j, b_{j+1}] and the function vanishes elsewhere.
/// The representation is canonical: no leading/trailing zero pieces and no
/// two adjacent equal pieces.
class PiecewisePolynomial {
public:
    PiecewisePolynomial() = default;  // zero function
    PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);
    static PiecewisePolynomial indicator(const IntervalIndicator& f);

    bool is_zero() const { return pieces_.empty(); }
    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }

    Rational evaluate(const Rational& x) const;
    Rational integral() const;
    PiecewisePolynomial multiply(const PiecewisePolynomial& o) const;
    PiecewisePolynomial scale(const Rational& c) const;

    /// x -> integral of this over (x, infinity), restricted to x >= 0:
    /// constant below the support, an exact antiderivative difference
    /// across it, zero above.
    PiecewisePolynomial tail_integral() const;

    bool operator==(const PiecewisePolynomial&) const = default;

    /// Total order for canonical term sorting (not a mathematical order).
    static int compare(const PiecewisePolynomial& a, const PiecewisePolynomial& b);

private:
    void normalize();
    std::vector<Rational> breaks_;     // pieces_.size() + 1 entries when non-zero
    std::vector<Polynomial> pieces_;
};

/// Inner product of two piecewise polynomials (real-valued L2 pairing).
Rational pairing(const PiecewisePolynomial& a, const PiecewisePolynomial& b);

/// Simple tensor: ordered factor list, slot 0 the most recently created.
struct SimpleTensor {
    std::vector<PiecewisePolynomial> factors;
    bool operator==(const SimpleTensor&) const = default;
    static int compare(const SimpleTensor& a, const SimpleTensor& b);
};

/// Finite linear combination of simple tensors plus a vacuum coefficient,
/// canonicalized (terms sorted, merged, zero terms pruned).
class TensorState {
public:
    TensorState() = default;  // zero vector
    static TensorState vacuum(Rational coefficient = 1);

    const Rational& vacuum_coefficient() const { return vacuum_; }
    const std::vector<std::pair<Rational, SimpleTensor>>& terms() const { return terms_; }
    bool is_zero() const { return vacuum_ == 0 && terms_.empty(); }

    void add_vacuum(const Rational& c) { vacuum_ += c; }
    void add_term(Rational coefficient, SimpleTensor tensor);
    void canonicalize();

    TensorState& operator+=(const TensorState& o);
    friend TensorState operator+(TensorState a, const TensorState& b) { return a += b; }

private:
    Rational vacuum_ = 0;
    std::vector<std::pair<Rational, SimpleTensor>> terms_;
};

/// Creation operator: prepends the indicator as a fresh first factor.
TensorState create(Level m, const IntervalIndicator& f, const TensorState& v);

/// Annihilation operator: kills the vacuum, contracts the first factor by
/// the full inner product on tensors of length at most m, and multiplies
/// the next factor by the truncated-integral function psi above length m.
TensorState annihilate(Level m, const IntervalIndicator& f, const TensorState& v);

/// Creation/annihilation pattern induced by a pair partition: the earlier
/// element of each block annihilates, the later one creates.
struct EpsilonStep {
    bool creates;
    IntervalIndicator argument;
};
using EpsilonWord = std::vector<EpsilonStep>;
EpsilonWord epsilon_word(const PairPartition& pi, const SupportProfile& profile);

/// Applies an operator word to the vacuum, rightmost letter first.
TensorState apply_word(Level m, const EpsilonWord& word);

/// Vacuum expectation of the operator word of a pair partition.
Rational pair_partition_expectation(Level m, const PairPartition& pi,
                                    const SupportProfile& profile);

/// Vacuum mixed moment of the position operators (creation plus
/// annihilation) indexed by the profile; zero for odd lengths.
Rational gaussian_moment(Level m, const SupportProfile& profile);

/// The same moment as a combinatorial sum: compatible colored non-crossing
/// pair partitions weighted by block inner products, divided by the
/// factorials of the equal-support pair counts.
Rational partition_sum_moment(Level m, const SupportProfile& profile);

/// Equivalent sum over unordered diagrams with admissible colorings,
/// weighted by support lengths over (inner-block count + 1); diagrams with
/// no admissible coloring contribute nothing.
Rational inner_weighted_sum_moment(Level m, const SupportProfile& profile);

/// Factorized inner product: tensors pair slotwise. Exact for states whose
/// factors have pairwise disjoint supports (the projected geometry
/// degenerates to a product there); not meaningful beyond that.
Rational inner_product(const TensorState& u, const TensorState& v);

/// Profile grammar "s:t,s:t,..." with rational endpoints.
SupportProfile parse_profile(const std::string& text);
std::string format_profile(const SupportProfile& profile);

} // namespace monohier::fock

#endif
