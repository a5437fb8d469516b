#ifndef MONOHIER_STATES_HPP
#define MONOHIER_STATES_HPP

#include "monohier/arith.hpp"
#include "monohier/level.hpp"
#include "monohier/multipoly.hpp"
#include "monohier/polynomial.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monohier::states {

/// Marginal data of one algebra: the moment sequence of its distinguished
/// self-adjoint generator together with a finite tridiagonal model (monic
/// orthogonal-polynomial basis, sub-diagonal 1) that reproduces every
/// provided moment. Construction validates positive semidefiniteness of the
/// moment Hankel matrix up to the model dimension.
class AlgebraSpec {
public:
    AlgebraSpec(int index, std::vector<Rational> moments, int dimension);

    int index() const { return index_; }
    int max_order() const { return static_cast<int>(moments_.size()) - 1; }
    /// Effective model dimension (smaller than requested when the sequence
    /// has finite support).
    int dimension() const { return static_cast<int>(alpha_.size()); }
    const std::vector<Rational>& moments() const { return moments_; }
    Rational moment(int order) const;
    const std::vector<Rational>& jacobi_alpha() const { return alpha_; }
    const std::vector<Rational>& jacobi_beta() const { return beta_; }

    /// Matrix of a polynomial in the generator on the model basis.
    std::vector<std::vector<Rational>> generator_matrix(const Polynomial& element) const;

    /// Marginal built from tridiagonal data: moments are derived from the
    /// model, so the result is consistent by construction.
    static AlgebraSpec from_jacobi(int index, const std::vector<Rational>& alpha,
                                   const std::vector<Rational>& beta, int max_order);

private:
    int index_;
    std::vector<Rational> moments_;
    std::vector<Rational> alpha_;  // diagonal, 1-based in math terms
    std::vector<Rational> beta_;   // super-diagonal
};

/// Finite family of algebras, linearly ordered by their integer indices.
class AlgebraRegistry {
public:
    void add(AlgebraSpec spec);
    const AlgebraSpec& at(int index) const;
    bool contains(int index) const { return specs_.count(index) > 0; }
    std::vector<int> indices() const;

    /// JSON array of {"index": int, "moments": [rationals], "dim": int};
    /// moment entries may be integers or exact strings like "3/2".
    static AlgebraRegistry from_json(const std::string& text);

private:
    std::map<int, AlgebraSpec> specs_;
};

/// One parsed word letter: a polynomial in the generator of one algebra,
/// optionally centered against the state.
struct WordLetter {
    int algebra = 0;
    Polynomial base;        // polynomial in the generator; constant = unit multiple
    bool centered = false;

    static WordLetter generator(int algebra, int power = 1) {
        return {algebra, Polynomial::monomial(1, power), false};
    }
    static WordLetter unit(int algebra) { return {algebra, Polynomial::constant(1), false}; }
    static WordLetter centered_generator(int algebra, int power = 1) {
        return {algebra, Polynomial::monomial(1, power), true};
    }
};
using Word = std::vector<WordLetter>;

/// Compact word grammar: whitespace-separated letters "a1", "b2^3"
/// (generator powers; the leading letter is cosmetic, the digits are the
/// algebra index), "u1" (unit), "c(a1)" (centered).
Word parse_word(const std::string& text);

/// Value of the hierarchy product state on a word, by terminating
/// rewriting: adjacent same-algebra letters are merged, the leftmost
/// non-centered letter is split against the unit, units are eliminated by
/// the position/order rule, and fully centered alternating words vanish.
Rational evaluate_word(const Word& word, Level m, const AlgebraRegistry& registry);

/// Variable id of the symbolic marginal moment of given order (order >= 1).
int moment_variable(int algebra, int order);

/// Same evaluation with marginal moments left as indeterminates; the result
/// is a polynomial in the variables moment_variable(i, p).
MultiPoly evaluate_word_symbolic(const Word& word, Level m);

/// Reusable evaluator sharing a memo table across words (same registry and
/// level). Useful for large sums of related words.
class WordEvaluator {
public:
    WordEvaluator(Level m, const AlgebraRegistry& registry);
    ~WordEvaluator();
    WordEvaluator(const WordEvaluator&) = delete;
    WordEvaluator& operator=(const WordEvaluator&) = delete;
    Rational evaluate(const Word& word);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct ProductSpaceOptions {
    std::size_t basis_cap = 1'000'000;  // overridden by MONOHIER_MAX_BASIS
    /// Tensor length cap; required at level infinity. Truncation at a cap
    /// of at least the word length leaves vacuum moments exact.
    std::optional<int> max_tensor_len;
};

/// One basis simple tensor: algebra index and excited model level per slot,
/// slot 0 being the most recently created factor. The empty label is the
/// vacuum.
struct TensorLabel {
    std::vector<int> algebra;
    std::vector<int> excitation;
    bool operator==(const TensorLabel&) const = default;
    auto operator<=>(const TensorLabel&) const = default;
};

/// Explicit orthogonal basis of the hierarchy product of the algebras'
/// model spaces: the vacuum plus every admissible simple tensor (index
/// sequences adjacent-distinct, with a strictly decreasing prefix once the
/// length exceeds m).
class ProductSpace {
public:
    ProductSpace(Level m, std::vector<AlgebraSpec> algebras, ProductSpaceOptions options = {});

    Level level() const { return m_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<TensorLabel>& basis() const { return basis_; }
    const AlgebraSpec& algebra(int index) const;
    const std::vector<AlgebraSpec>& algebras() const { return algebras_; }
    int basis_index(const TensorLabel& label) const;  // -1 when absent
    bool truncated() const { return truncated_; }

    /// Membership of a basis vector in the domain subspace of the given
    /// algebra: vacuum and tensors shorter than m always; longer tensors
    /// require a leading index <= index.
    bool in_domain(int basis_pos, int index) const;

private:
    Level m_;
    std::vector<AlgebraSpec> algebras_;
    std::vector<TensorLabel> basis_;
    std::map<TensorLabel, int> positions_;
    bool truncated_ = false;
};

ProductSpace build_product_space(Level m, std::vector<AlgebraSpec> algebras,
                                 ProductSpaceOptions options = {});

/// Sparse/dense matrix on the product-space basis. Dense storage is used up
/// to 512 basis vectors, coordinate lists above.
class Operator {
public:
    Operator(int dimension, std::vector<std::vector<std::pair<int, Rational>>> columns);
    int dimension() const { return dim_; }
    Rational entry(int row, int col) const;
    /// y = A x for a sparse state vector.
    std::map<int, Rational> apply(const std::map<int, Rational>& x) const;
    bool is_dense() const { return !dense_.empty(); }

private:
    int dim_;
    std::vector<std::vector<Rational>> dense_;                      // dim <= 512
    std::vector<std::vector<std::pair<int, Rational>>> columns_;    // otherwise
};

/// Matrix of the truncated representation of a polynomial in the generator
/// of one algebra: the free-product action on the domain subspace, zero on
/// its orthogonal complement.
Operator represent(const ProductSpace& space, int index, const Polynomial& element);

/// Vacuum expectation of a product of represented elements, applied right
/// to left.
Rational vacuum_moment(const ProductSpace& space,
                       const std::vector<std::pair<int, Polynomial>>& word);
Rational vacuum_moment(const ProductSpace& space, const Word& word);

/// Exact n-th moment of (X_1+...+X_N)/sqrt(N) for N identically distributed
/// hierarchy-independent copies of the marginal (mean zero, variance one),
/// via the ordered-partition expansion. Even orders divide by N^(n/2)
/// exactly; odd orders carry the leftover square root symbolically.
struct ScaledMoment {
    Rational value;
    bool half_power = false;  // moment = value * N^(-1/2) when set
};
ScaledMoment sum_moment_finite(Level m, int N, int order, const AlgebraSpec& marginal);

} // namespace monohier::states

#endif
