#include "monohier/states.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace monohier::states {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix matrix_multiply(const Matrix& a, const Matrix& b) {
    const std::size_t d = a.size();
    Matrix r(d, std::vector<Rational>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

std::vector<Rational> tridiagonal_moments(const std::vector<Rational>& alpha,
                                          const std::vector<Rational>& beta, int max_order) {
    const std::size_t d = alpha.size();
    std::vector<Rational> v(d, 0), w(d, 0);
    v[0] = 1;
    std::vector<Rational> mu{Rational(1)};
    for (int n = 1; n <= max_order; ++n) {
        for (std::size_t j = 0; j < d; ++j) {
            Rational acc = alpha[j] * v[j];
            if (j > 0) acc += v[j - 1];
            if (j + 1 < d) acc += beta[j] * v[j + 1];
            w[j] = acc;
        }
        std::swap(v, w);
        mu.push_back(v[0]);
    }
    return mu;
}

} // namespace

AlgebraSpec::AlgebraSpec(int index, std::vector<Rational> moments, int dimension)
    : index_(index), moments_(std::move(moments)) {
    if (moments_.empty() || moments_[0] != 1)
        throw std::invalid_argument("marginal moments must start with mu_0 = 1");
    if (dimension < 1) throw std::invalid_argument("model dimension must be >= 1");
    const int max_order = this->max_order();

    auto inner = [&](const Polynomial& f, const Polynomial& g) {
        if (f.degree() + g.degree() > max_order)
            throw std::invalid_argument("insufficient moments for the requested model dimension");
        Rational acc = 0;
        const auto& fc = f.coefficients();
        const auto& gc = g.coefficients();
        for (std::size_t i = 0; i < fc.size(); ++i)
            for (std::size_t j = 0; j < gc.size(); ++j)
                acc += fc[i] * gc[j] * moments_[i + j];
        return acc;
    };

    Polynomial x = Polynomial::identity();
    Polynomial p_prev;                      // zero
    Polynomial p_cur = Polynomial::constant(1);
    Rational norm_prev = 0, norm_cur = 1;   // <p_0,p_0> = mu_0
    for (int k = 0; k < dimension; ++k) {
        if (2 * k + 1 > max_order && k == dimension - 1) {
            // trailing diagonal entry is invisible to the reproducible orders
            alpha_.push_back(0);
            break;
        }
        alpha_.push_back(inner(x * p_cur, p_cur) / norm_cur);
        if (k == dimension - 1) break;
        Polynomial p_next = (x - Polynomial::constant(alpha_.back())) * p_cur;
        if (k > 0) p_next -= (norm_cur / norm_prev) * p_prev;
        Rational norm_next = inner(p_next, p_next);
        if (norm_next < 0)
            throw std::invalid_argument("moment Hankel matrix is not positive semidefinite");
        if (norm_next == 0) break;  // finitely supported marginal: rank reached
        beta_.push_back(norm_next / norm_cur);
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        norm_prev = norm_cur;
        norm_cur = norm_next;
    }

    auto reproduced = tridiagonal_moments(alpha_, beta_, max_order);
    for (int n = 0; n <= max_order; ++n)
        if (reproduced[n] != moments_[n])
            throw std::invalid_argument(
                "model dimension cannot reproduce the provided moments");
}

Rational AlgebraSpec::moment(int order) const {
    if (order < 0 || order > max_order())
        throw std::out_of_range("marginal order exhausted for algebra " + std::to_string(index_));
    return moments_[order];
}

Matrix AlgebraSpec::generator_matrix(const Polynomial& element) const {
    const int d = dimension();
    if (element.degree() > max_order())
        throw std::out_of_range("element degree exceeds the marginal model");
    Matrix j(d, std::vector<Rational>(d, 0));
    for (int k = 0; k < d; ++k) {
        j[k][k] = alpha_[k];
        if (k + 1 < d) {
            j[k + 1][k] = 1;
            j[k][k + 1] = beta_[k];
        }
    }
    Matrix w(d, std::vector<Rational>(d, 0));
    for (int k = element.degree(); k >= 0; --k) {
        w = matrix_multiply(w, j);
        Rational c = element.coefficient(k);
        for (int i = 0; i < d; ++i) w[i][i] += c;
    }
    return w;
}

AlgebraSpec AlgebraSpec::from_jacobi(int index, const std::vector<Rational>& alpha,
                                     const std::vector<Rational>& beta, int max_order) {
    if (alpha.empty() || beta.size() + 1 != alpha.size())
        throw std::invalid_argument("need one more diagonal than off-diagonal entry");
    for (const auto& b : beta)
        if (b <= 0) throw std::invalid_argument("off-diagonal Jacobi entries must be positive");
    int need = std::max(max_order, 2 * static_cast<int>(alpha.size()) - 1);
    auto moments = tridiagonal_moments(alpha, beta, need);
    return AlgebraSpec(index, std::move(moments), static_cast<int>(alpha.size()));
}

void AlgebraRegistry::add(AlgebraSpec spec) {
    int index = spec.index();
    if (!specs_.emplace(index, std::move(spec)).second)
        throw std::invalid_argument("duplicate algebra index " + std::to_string(index));
}

const AlgebraSpec& AlgebraRegistry::at(int index) const {
    auto it = specs_.find(index);
    if (it == specs_.end())
        throw std::out_of_range("unknown algebra index " + std::to_string(index));
    return it->second;
}

std::vector<int> AlgebraRegistry::indices() const {
    std::vector<int> out;
    for (auto& [i, s] : specs_) out.push_back(i);
    return out;
}

AlgebraRegistry AlgebraRegistry::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("algebra registry must be a JSON array");
    AlgebraRegistry reg;
    for (const auto& entry : j) {
        std::vector<Rational> moments;
        for (const auto& v : entry.at("moments")) {
            if (v.is_string())
                moments.push_back(parse_rational(v.get<std::string>()));
            else if (v.is_number_integer())
                moments.push_back(Rational(v.get<long>()));
            else
                throw std::invalid_argument("moments must be integers or exact strings");
        }
        reg.add(AlgebraSpec(entry.at("index").get<int>(), std::move(moments),
                            entry.at("dim").get<int>()));
    }
    return reg;
}

Word parse_word(const std::string& text) {
    Word word;
    std::istringstream in(text);
    std::string token;
    auto parse_letter = [](const std::string& tok, bool centered) -> WordLetter {
        if (tok.size() < 2) throw std::invalid_argument("bad word letter: '" + tok + "'");
        std::size_t caret = tok.find('^');
        std::string name = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
        int power = 1;
        if (caret != std::string::npos) power = std::stoi(tok.substr(caret + 1));
        if (power < 0) throw std::invalid_argument("negative generator power");
        if (!std::isalpha(static_cast<unsigned char>(name[0])))
            throw std::invalid_argument("bad word letter: '" + tok + "'");
        int algebra = std::stoi(name.substr(1));
        return WordLetter{algebra, Polynomial::monomial(1, power), centered};
    };
    while (in >> token) {
        if (token.size() >= 3 && token.compare(0, 2, "c(") == 0 && token.back() == ')') {
            word.push_back(parse_letter(token.substr(2, token.size() - 3), true));
        } else if (token[0] == 'u') {
            word.push_back(WordLetter::unit(std::stoi(token.substr(1))));
        } else {
            word.push_back(parse_letter(token, false));
        }
    }
    return word;
}

namespace {

template <class R>
struct GenericLetter {
    int algebra;
    PolynomialT<R> element;
};

template <class R, class MomentFn>
class RewritingEngine {
public:
    RewritingEngine(Level m, MomentFn moment) : m_(m), moment_(std::move(moment)) {}

    R evaluate(std::vector<GenericLetter<R>> word) {
        merge(word);
        return eval(std::move(word));
    }

private:
    using WordV = std::vector<GenericLetter<R>>;

    static void merge(WordV& w) {
        WordV out;
        for (auto& l : w) {
            if (!out.empty() && out.back().algebra == l.algebra)
                out.back().element = out.back().element * l.element;
            else
                out.push_back(std::move(l));
        }
        w = std::move(out);
    }

    R phi(const GenericLetter<R>& l) {
        const auto& c = l.element.coefficients();
        R acc(0);
        for (std::size_t p = 0; p < c.size(); ++p) {
            if (c[p] == R(0)) continue;
            if (p == 0)
                acc += c[0];
            else
                acc += c[p] * moment_(l.algebra, static_cast<int>(p));
        }
        return acc;
    }

    // expects a merged word
    R eval(WordV word) {
        if (word.empty()) return R(1);
        for (auto& l : word)
            if (l.element.is_zero()) return R(0);
        for (std::size_t j = 0; j < word.size(); ++j) {
            R v = phi(word[j]);
            if (v == R(0)) continue;
            R result(0);
            {
                WordV centered = word;
                centered[j].element -= PolynomialT<R>::constant(v);
                if (!centered[j].element.is_zero()) result += eval(std::move(centered));
            }
            if (unit_acts_as_identity(word, j)) {
                WordV shorter = word;
                shorter.erase(shorter.begin() + j);
                merge(shorter);
                result += v * eval(std::move(shorter));
            }
            return result;
        }
        // fully centered word with adjacent-distinct indices
        return R(0);
    }

    // The unit replacing letter j acts as identity iff its position is at
    // most m, or it precedes the first disorder of the index sequence read
    // from position m on. Letters before j are centered by construction.
    bool unit_acts_as_identity(const WordV& word, std::size_t j0) {
        const int n = static_cast<int>(word.size());
        const int j = static_cast<int>(j0) + 1;
        if (m_.admits_position(j)) return true;
        int r = m_.value();
        while (r < n && word[r - 1].algebra < word[r].algebra) ++r;
        return j <= r;
    }

    Level m_;
    MomentFn moment_;
};

std::vector<GenericLetter<Rational>> resolve_letters(const Word& word,
                                                     const AlgebraRegistry& registry) {
    std::vector<GenericLetter<Rational>> out;
    out.reserve(word.size());
    for (const auto& l : word) {
        const auto& spec = registry.at(l.algebra);
        Polynomial element = l.base;
        if (l.centered) {
            Rational mean = 0;
            for (int p = 0; p <= element.degree(); ++p)
                mean += element.coefficient(p) * spec.moment(p);
            element -= Polynomial::constant(mean);
        }
        out.push_back({l.algebra, std::move(element)});
    }
    return out;
}

std::string word_key(const std::vector<GenericLetter<Rational>>& word) {
    std::string key;
    for (const auto& l : word) {
        key += std::to_string(l.algebra);
        key += ':';
        for (const auto& c : l.element.coefficients()) {
            key += c.get_str();
            key += ',';
        }
        key += ';';
    }
    return key;
}

} // namespace

struct WordEvaluator::Impl {
    Level m;
    const AlgebraRegistry& registry;
    std::map<std::string, Rational> memo;

    Impl(Level level, const AlgebraRegistry& reg) : m(level), registry(reg) {}

    Rational run(std::vector<GenericLetter<Rational>> word) {
        auto key = word_key(word);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto moment = [this](int algebra, int order) { return registry.at(algebra).moment(order); };
        struct MemoEngine : RewritingEngine<Rational, decltype(moment)> {
            // plain engine; memo handled one level up per full word
            using RewritingEngine<Rational, decltype(moment)>::RewritingEngine;
        };
        Rational value = MemoEngine(m, moment).evaluate(std::move(word));
        memo.emplace(std::move(key), value);
        return value;
    }
};

WordEvaluator::WordEvaluator(Level m, const AlgebraRegistry& registry)
    : impl_(std::make_unique<Impl>(m, registry)) {}
WordEvaluator::~WordEvaluator() = default;

Rational WordEvaluator::evaluate(const Word& word) {
    return impl_->run(resolve_letters(word, impl_->registry));
}

Rational evaluate_word(const Word& word, Level m, const AlgebraRegistry& registry) {
    auto moment = [&registry](int algebra, int order) {
        return registry.at(algebra).moment(order);
    };
    RewritingEngine<Rational, decltype(moment)> engine(m, moment);
    return engine.evaluate(resolve_letters(word, registry));
}

int moment_variable(int algebra, int order) {
    if (order < 1 || order >= 64) throw std::invalid_argument("symbolic moment order out of range");
    return algebra * 64 + order;
}

MultiPoly evaluate_word_symbolic(const Word& word, Level m) {
    auto moment = [](int algebra, int order) {
        return MultiPoly::variable(moment_variable(algebra, order));
    };
    std::vector<GenericLetter<MultiPoly>> letters;
    for (const auto& l : word) {
        std::vector<MultiPoly> coeffs;
        for (int p = 0; p <= l.base.degree(); ++p)
            coeffs.emplace_back(MultiPoly(l.base.coefficient(p)));
        PolynomialT<MultiPoly> element(std::move(coeffs));
        if (l.centered) {
            MultiPoly mean(0);
            for (int p = 0; p <= element.degree(); ++p) {
                if (element.coefficient(p) == MultiPoly(0)) continue;
                mean += element.coefficient(p) * (p == 0 ? MultiPoly(1) : moment(l.algebra, p));
            }
            element -= PolynomialT<MultiPoly>::constant(mean);
        }
        letters.push_back({l.algebra, std::move(element)});
    }
    RewritingEngine<MultiPoly, decltype(moment)> engine(m, moment);
    return engine.evaluate(std::move(letters));
}

ProductSpace::ProductSpace(Level m, std::vector<AlgebraSpec> algebras, ProductSpaceOptions options)
    : m_(m), algebras_(std::move(algebras)) {
    if (algebras_.empty()) throw std::invalid_argument("product space needs at least one algebra");
    std::sort(algebras_.begin(), algebras_.end(),
              [](const AlgebraSpec& a, const AlgebraSpec& b) { return a.index() < b.index(); });
    for (std::size_t i = 1; i < algebras_.size(); ++i)
        if (algebras_[i].index() == algebras_[i - 1].index())
            throw std::invalid_argument("duplicate algebra index in product space");

    int natural_len = 0;
    if (!m_.is_infinite())
        natural_len = m_.value() + static_cast<int>(algebras_.size()) - 1;
    int max_len;
    if (m_.is_infinite()) {
        if (!options.max_tensor_len)
            throw std::invalid_argument("level infinity requires an explicit tensor length cap");
        max_len = *options.max_tensor_len;
        truncated_ = true;
    } else {
        max_len = natural_len;
        if (options.max_tensor_len && *options.max_tensor_len < natural_len) {
            max_len = *options.max_tensor_len;
            truncated_ = true;
        }
    }

    basis_.push_back(TensorLabel{});  // vacuum
    positions_[TensorLabel{}] = 0;

    std::vector<int> excitable;  // indices whose model has excited states
    for (const auto& a : algebras_)
        if (a.dimension() >= 2) excitable.push_back(a.index());

    std::vector<std::vector<int>> current;  // admissible index sequences of this length
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        if (len == 1) {
            for (int i : excitable) next.push_back({i});
        } else {
            for (const auto& seq : current)
                for (int i : excitable) {
                    bool ok = m_.admits_position(len) ? i != seq[0] : i > seq[0];
                    if (!ok) continue;
                    std::vector<int> extended;
                    extended.reserve(seq.size() + 1);
                    extended.push_back(i);
                    extended.insert(extended.end(), seq.begin(), seq.end());
                    next.push_back(std::move(extended));
                }
        }
        for (const auto& seq : next) {
            // all excitation label combinations, rightmost slot fastest
            std::vector<int> exc(seq.size(), 1);
            while (true) {
                TensorLabel label{seq, exc};
                if (basis_.size() >= options.basis_cap)
                    throw std::length_error("product space basis exceeds the configured cap");
                positions_[label] = static_cast<int>(basis_.size());
                basis_.push_back(std::move(label));
                int slot = static_cast<int>(seq.size()) - 1;
                while (slot >= 0 && exc[slot] + 1 >= algebra(seq[slot]).dimension()) {
                    exc[slot] = 1;
                    --slot;
                }
                if (slot < 0) break;
                ++exc[slot];
            }
        }
        current = std::move(next);
        if (current.empty()) break;
    }
}

ProductSpace build_product_space(Level m, std::vector<AlgebraSpec> algebras,
                                 ProductSpaceOptions options) {
    return ProductSpace(m, std::move(algebras), options);
}

const AlgebraSpec& ProductSpace::algebra(int index) const {
    for (const auto& a : algebras_)
        if (a.index() == index) return a;
    throw std::out_of_range("unknown algebra index " + std::to_string(index));
}

int ProductSpace::basis_index(const TensorLabel& label) const {
    auto it = positions_.find(label);
    return it == positions_.end() ? -1 : it->second;
}

bool ProductSpace::in_domain(int basis_pos, int index) const {
    const auto& label = basis_.at(basis_pos);
    if (label.algebra.empty() || m_.is_infinite()) return true;
    if (static_cast<int>(label.algebra.size()) < m_.value()) return true;
    return label.algebra[0] <= index;
}

Operator::Operator(int dimension, std::vector<std::vector<std::pair<int, Rational>>> columns)
    : dim_(dimension) {
    if (dim_ <= 512) {
        dense_.assign(dim_, std::vector<Rational>(dim_, 0));
        for (int col = 0; col < dim_; ++col)
            for (auto& [row, v] : columns[col]) dense_[row][col] += v;
    } else {
        columns_ = std::move(columns);
    }
}

Rational Operator::entry(int row, int col) const {
    if (!dense_.empty()) return dense_[row][col];
    Rational acc = 0;
    for (auto& [r, v] : columns_[col])
        if (r == row) acc += v;
    return acc;
}

std::map<int, Rational> Operator::apply(const std::map<int, Rational>& x) const {
    std::map<int, Rational> y;
    auto add = [&y](int row, const Rational& v) {
        auto [it, inserted] = y.emplace(row, v);
        if (!inserted) it->second += v;
    };
    for (auto& [col, xv] : x) {
        if (xv == 0) continue;
        if (!dense_.empty()) {
            for (int row = 0; row < dim_; ++row)
                if (dense_[row][col] != 0) add(row, dense_[row][col] * xv);
        } else {
            for (auto& [row, v] : columns_[col]) add(row, v * xv);
        }
    }
    std::erase_if(y, [](const auto& kv) { return kv.second == 0; });
    return y;
}

namespace {

// action of one represented element on a single basis vector
std::vector<std::pair<int, Rational>> column_action(const ProductSpace& space, int index,
                                                    const Matrix& w, int pos) {
    std::vector<std::pair<int, Rational>> out;
    if (!space.in_domain(pos, index)) return out;
    const auto& label = space.basis()[pos];
    const int d = static_cast<int>(w.size());

    auto push_target = [&](TensorLabel target, const Rational& value) {
        if (value == 0) return;
        int target_pos = space.basis_index(target);
        if (target_pos < 0) {
            if (space.truncated()) return;  // beyond the explicit length cap
            throw std::logic_error("representation left the product-space basis");
        }
        out.emplace_back(target_pos, value);
    };

    if (label.algebra.empty() || label.algebra[0] != index) {
        // fresh factor: excited part prepends, scalar part keeps the vector
        for (int l = 1; l < d; ++l) {
            TensorLabel target;
            target.algebra.reserve(label.algebra.size() + 1);
            target.excitation.reserve(label.excitation.size() + 1);
            target.algebra.push_back(index);
            target.excitation.push_back(l);
            target.algebra.insert(target.algebra.end(), label.algebra.begin(),
                                  label.algebra.end());
            target.excitation.insert(target.excitation.end(), label.excitation.begin(),
                                     label.excitation.end());
            push_target(std::move(target), w[l][0]);
        }
        if (w[0][0] != 0) out.emplace_back(pos, w[0][0]);
    } else {
        // act on the first factor: excited parts stay, the scalar part
        // contracts the slot away
        const int k = label.excitation[0];
        for (int l = 1; l < d; ++l) {
            if (w[l][k] == 0) continue;
            TensorLabel target = label;
            target.excitation[0] = l;
            push_target(std::move(target), w[l][k]);
        }
        if (w[0][k] != 0) {
            TensorLabel target{{label.algebra.begin() + 1, label.algebra.end()},
                               {label.excitation.begin() + 1, label.excitation.end()}};
            push_target(std::move(target), w[0][k]);
        }
    }
    return out;
}

} // namespace

Operator represent(const ProductSpace& space, int index, const Polynomial& element) {
    Matrix w = space.algebra(index).generator_matrix(element);
    std::vector<std::vector<std::pair<int, Rational>>> columns(space.dimension());
    for (int pos = 0; pos < space.dimension(); ++pos)
        columns[pos] = column_action(space, index, w, pos);
    return Operator(space.dimension(), std::move(columns));
}

Rational vacuum_moment(const ProductSpace& space,
                       const std::vector<std::pair<int, Polynomial>>& word) {
    std::map<int, Rational> state{{0, Rational(1)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        Matrix w = space.algebra(it->first).generator_matrix(it->second);
        std::map<int, Rational> next;
        for (auto& [pos, coeff] : state) {
            for (auto& [row, v] : column_action(space, it->first, w, pos)) {
                auto [entry, inserted] = next.emplace(row, v * coeff);
                if (!inserted) entry->second += v * coeff;
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        state = std::move(next);
        if (state.empty()) return 0;
    }
    auto it = state.find(0);
    return it == state.end() ? Rational(0) : it->second;
}

Rational vacuum_moment(const ProductSpace& space, const Word& word) {
    std::vector<std::pair<int, Polynomial>> resolved;
    resolved.reserve(word.size());
    for (const auto& l : word) {
        Polynomial element = l.base;
        if (l.centered) {
            const auto& spec = space.algebra(l.algebra);
            Rational mean = 0;
            for (int p = 0; p <= element.degree(); ++p)
                mean += element.coefficient(p) * spec.moment(p);
            element -= Polynomial::constant(mean);
        }
        resolved.emplace_back(l.algebra, std::move(element));
    }
    return vacuum_moment(space, resolved);
}

namespace {

constexpr int kFiniteSumOrderCap = 8;

void set_partitions_without_singletons(
    int n, const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            if (std::all_of(blocks.begin(), blocks.end(),
                            [](const auto& b) { return b.size() >= 2; }))
                fn(blocks);
            return;
        }
        for (std::size_t i = 0, existing = blocks.size(); i < existing; ++i) {
            blocks[i].push_back(next);
            self(self, next + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({next});
        self(self, next + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
}

} // namespace

ScaledMoment sum_moment_finite(Level m, int N, int order, const AlgebraSpec& marginal) {
    if (N < 1) throw std::invalid_argument("need at least one summand");
    if (order < 0 || order > kFiniteSumOrderCap)
        throw std::out_of_range("finite-sum moment order cap exceeded");
    if (marginal.moment(1) != 0 || marginal.moment(2) != 1)
        throw std::invalid_argument("marginal must have mean zero and variance one");
    if (order == 0) return {Rational(1), false};

    const int max_blocks = order / 2;
    AlgebraRegistry registry;
    for (int i = 1; i <= std::max(1, max_blocks); ++i)
        registry.add(AlgebraSpec(i, marginal.moments(), marginal.dimension()));
    WordEvaluator evaluator(m, registry);

    // mean zero kills every partition containing a singleton block, so the
    // ordered-partition expansion runs over singleton-free partitions only
    Rational total = 0;
    set_partitions_without_singletons(order, [&](const std::vector<std::vector<int>>& blocks) {
        const int b = static_cast<int>(blocks.size());
        std::vector<int> block_of(order + 1);
        for (int bi = 0; bi < b; ++bi)
            for (int e : blocks[bi]) block_of[e] = bi;
        std::vector<int> color(b);
        for (int i = 0; i < b; ++i) color[i] = i + 1;
        Rational weight = Rational(binomial(N, b));
        if (weight == 0) return;
        do {
            Word word;
            word.reserve(order);
            for (int s = 1; s <= order; ++s)
                word.push_back(WordLetter::generator(color[block_of[s]]));
            total += weight * evaluator.evaluate(word);
        } while (std::next_permutation(color.begin(), color.end()));
    });

    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), N, order / 2);
    Rational value = total / Rational(scale);
    return {value, order % 2 == 1};
}

} // namespace monohier::states
