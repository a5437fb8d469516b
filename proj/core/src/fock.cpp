#include "monohier/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monohier::fock {

namespace {

// polynomial of the piece containing x, assuming front < x <= back
const Polynomial& piece_at(const PiecewisePolynomial& f, const Rational& x) {
    const auto& breaks = f.breakpoints();
    auto it = std::lower_bound(breaks.begin(), breaks.end(), x);
    return f.pieces()[(it - breaks.begin()) - 1];
}

} // namespace

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints,
                                         std::vector<Polynomial> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (!pieces_.empty() && breaks_.size() != pieces_.size() + 1)
        throw std::invalid_argument("need one more breakpoint than pieces");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i - 1] < breaks_[i]))
            throw std::invalid_argument("breakpoints must be strictly increasing");
    normalize();
}

PiecewisePolynomial PiecewisePolynomial::indicator(const IntervalIndicator& f) {
    return PiecewisePolynomial({f.lower, f.upper}, {Polynomial::constant(1)});
}

void PiecewisePolynomial::normalize() {
    // merge adjacent equal pieces
    std::vector<Rational> nb;
    std::vector<Polynomial> np;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!np.empty() && np.back() == pieces_[i]) {
            nb.back() = breaks_[i + 1];
            continue;
        }
        if (np.empty()) nb.push_back(breaks_[i]);
        np.push_back(pieces_[i]);
        nb.push_back(breaks_[i + 1]);
    }
    // strip zero pieces at both ends
    std::size_t lo = 0, hi = np.size();
    while (lo < hi && np[lo].is_zero()) ++lo;
    while (hi > lo && np[hi - 1].is_zero()) --hi;
    if (lo == hi) {
        breaks_.clear();
        pieces_.clear();
        return;
    }
    pieces_.assign(np.begin() + lo, np.begin() + hi);
    breaks_.assign(nb.begin() + lo, nb.begin() + hi + 1);
}

Rational PiecewisePolynomial::evaluate(const Rational& x) const {
    if (is_zero() || !(breaks_.front() < x) || breaks_.back() < x) return 0;
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
    std::size_t piece = (it - breaks_.begin()) - 1;
    return pieces_[piece].evaluate(x);
}

Rational PiecewisePolynomial::integral() const {
    Rational total = 0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        Polynomial anti = pieces_[i].antiderivative();
        total += anti.evaluate(breaks_[i + 1]) - anti.evaluate(breaks_[i]);
    }
    return total;
}

PiecewisePolynomial PiecewisePolynomial::multiply(const PiecewisePolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    Rational lo = std::max(breaks_.front(), o.breaks_.front());
    Rational hi = std::min(breaks_.back(), o.breaks_.back());
    if (!(lo < hi)) return {};
    std::vector<Rational> cuts{lo};
    for (const auto& b : breaks_)
        if (lo < b && b < hi) cuts.push_back(b);
    for (const auto& b : o.breaks_)
        if (lo < b && b < hi) cuts.push_back(b);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Polynomial> prods;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational& probe = cuts[i + 1];  // right endpoint lies inside (cut_i, cut_{i+1}]
        prods.push_back(piece_at(*this, probe) * piece_at(o, probe));
    }
    return PiecewisePolynomial(std::move(cuts), std::move(prods));
}

PiecewisePolynomial PiecewisePolynomial::scale(const Rational& c) const {
    if (c == 0 || is_zero()) return {};
    std::vector<Polynomial> scaled;
    for (const auto& p : pieces_) scaled.push_back(p * c);
    return PiecewisePolynomial(breaks_, std::move(scaled));
}

PiecewisePolynomial PiecewisePolynomial::tail_integral() const {
    if (is_zero()) return {};
    // suffix integrals piece by piece
    const std::size_t k = pieces_.size();
    std::vector<Rational> suffix(k + 1, Rational(0));
    std::vector<Polynomial> antis(k);
    for (std::size_t i = k; i-- > 0;) {
        antis[i] = pieces_[i].antiderivative();
        suffix[i] = suffix[i + 1] + antis[i].evaluate(breaks_[i + 1]) - antis[i].evaluate(breaks_[i]);
    }
    std::vector<Rational> nb;
    std::vector<Polynomial> np;
    if (Rational(0) < breaks_.front() && suffix[0] != 0) {
        nb.push_back(0);
        nb.push_back(breaks_.front());
        np.push_back(Polynomial::constant(suffix[0]));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (nb.empty()) nb.push_back(breaks_[i]);
        // on (b_i, b_{i+1}]: suffix[i+1] + F_i(b_{i+1}) - F_i(x)
        Polynomial piece = Polynomial::constant(suffix[i + 1] + antis[i].evaluate(breaks_[i + 1]));
        piece -= antis[i];
        np.push_back(std::move(piece));
        nb.push_back(breaks_[i + 1]);
    }
    return PiecewisePolynomial(std::move(nb), std::move(np));
}

int PiecewisePolynomial::compare(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
    if (a.breaks_.size() != b.breaks_.size()) return a.breaks_.size() < b.breaks_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.breaks_.size(); ++i)
        if (int c = cmp(a.breaks_[i], b.breaks_[i]); c != 0) return c < 0 ? -1 : 1;
    for (std::size_t i = 0; i < a.pieces_.size(); ++i) {
        const auto& ca = a.pieces_[i].coefficients();
        const auto& cb = b.pieces_[i].coefficients();
        if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
        for (std::size_t j = 0; j < ca.size(); ++j)
            if (int c = cmp(ca[j], cb[j]); c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

Rational pairing(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
    return a.multiply(b).integral();
}

int SimpleTensor::compare(const SimpleTensor& a, const SimpleTensor& b) {
    if (a.factors.size() != b.factors.size())
        return a.factors.size() < b.factors.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (int c = PiecewisePolynomial::compare(a.factors[i], b.factors[i]); c != 0) return c;
    return 0;
}

TensorState TensorState::vacuum(Rational coefficient) {
    TensorState s;
    s.vacuum_ = std::move(coefficient);
    return s;
}

void TensorState::add_term(Rational coefficient, SimpleTensor tensor) {
    if (coefficient == 0) return;
    for (const auto& f : tensor.factors)
        if (f.is_zero()) return;  // a zero factor kills the whole tensor
    terms_.emplace_back(std::move(coefficient), std::move(tensor));
}

void TensorState::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
        return SimpleTensor::compare(a.second, b.second) < 0;
    });
    std::vector<std::pair<Rational, SimpleTensor>> merged;
    for (auto& [c, t] : terms_) {
        if (!merged.empty() && merged.back().second == t)
            merged.back().first += c;
        else
            merged.emplace_back(std::move(c), std::move(t));
    }
    std::erase_if(merged, [](const auto& term) { return term.first == 0; });
    terms_ = std::move(merged);
}

TensorState& TensorState::operator+=(const TensorState& o) {
    vacuum_ += o.vacuum_;
    for (const auto& [c, t] : o.terms_) terms_.emplace_back(c, t);
    canonicalize();
    return *this;
}

TensorState create(Level, const IntervalIndicator& f, const TensorState& v) {
    TensorState out;
    auto fresh = PiecewisePolynomial::indicator(f);
    if (v.vacuum_coefficient() != 0)
        out.add_term(v.vacuum_coefficient(), SimpleTensor{{fresh}});
    for (const auto& [c, t] : v.terms()) {
        SimpleTensor extended;
        extended.factors.reserve(t.factors.size() + 1);
        extended.factors.push_back(fresh);
        extended.factors.insert(extended.factors.end(), t.factors.begin(), t.factors.end());
        out.add_term(c, std::move(extended));
    }
    out.canonicalize();
    return out;
}

TensorState annihilate(Level m, const IntervalIndicator& f, const TensorState& v) {
    TensorState out;
    auto fpiece = PiecewisePolynomial::indicator(f);
    for (const auto& [c, t] : v.terms()) {
        const int n = static_cast<int>(t.factors.size());
        if (n == 1) {
            out.add_vacuum(c * pairing(t.factors[0], fpiece));
        } else if (m.admits_position(n)) {
            Rational scalar = pairing(t.factors[0], fpiece);
            if (scalar == 0) continue;
            SimpleTensor rest{{t.factors.begin() + 1, t.factors.end()}};
            out.add_term(c * scalar, std::move(rest));
        } else {
            PiecewisePolynomial psi = t.factors[0].multiply(fpiece).tail_integral();
            SimpleTensor rest{{t.factors.begin() + 1, t.factors.end()}};
            rest.factors[0] = psi.multiply(rest.factors[0]);
            out.add_term(c, std::move(rest));
        }
    }
    out.canonicalize();
    return out;
}

EpsilonWord epsilon_word(const PairPartition& pi, const SupportProfile& profile) {
    if (profile.size() != pi.n)
        throw std::invalid_argument("profile length must match the ground set");
    std::vector<const IntervalIndicator*> arg(pi.n + 1, nullptr);
    std::vector<bool> creates(pi.n + 1, false);
    for (const auto& [first, second] : pi.blocks) {
        if (profile.at(first - 1) != profile.at(second - 1))
            throw std::invalid_argument("paired positions must carry equal supports");
        creates[second] = true;
        arg[first] = &profile.at(first - 1);
        arg[second] = &profile.at(second - 1);
    }
    EpsilonWord word;
    word.reserve(pi.n);
    for (int p = 1; p <= pi.n; ++p) word.push_back(EpsilonStep{creates[p], *arg[p]});
    return word;
}

TensorState apply_word(Level m, const EpsilonWord& word) {
    TensorState state = TensorState::vacuum();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        state = it->creates ? create(m, it->argument, state) : annihilate(m, it->argument, state);
    return state;
}

Rational pair_partition_expectation(Level m, const PairPartition& pi,
                                    const SupportProfile& profile) {
    return apply_word(m, epsilon_word(pi, profile)).vacuum_coefficient();
}

Rational gaussian_moment(Level m, const SupportProfile& profile) {
    TensorState state = TensorState::vacuum();
    for (int p = profile.size() - 1; p >= 0; --p)
        state = create(m, profile.at(p), state) + annihilate(m, profile.at(p), state);
    return state.vacuum_coefficient();
}

Rational partition_sum_moment(Level m, const SupportProfile& profile) {
    const int n = profile.size();
    if (n % 2 != 0) return 0;
    Rational denom = 1;
    for (const auto& group : profile.groups()) {
        if (group.positions.size() % 2 != 0) return 0;  // no compatible pairing exists
        denom *= Rational(factorial(static_cast<unsigned>(group.positions.size() / 2)));
    }
    Rational sum = 0;
    partitions::enumerate_ordered_noncrossing(n, m, true, [&](const partitions::OrderedPartition& p) {
        if (!partitions::is_compatible(p, profile)) return;
        Rational product = 1;
        for (const auto& block : p.blocks) product *= profile.at(block[0] - 1).length();
        sum += product;
    });
    return sum / denom;
}

Rational inner_weighted_sum_moment(Level m, const SupportProfile& profile) {
    const int n = profile.size();
    if (n % 2 != 0) return 0;
    Rational sum = 0;
    partitions::enumerate_noncrossing_unordered(n, true, [&](const std::vector<std::vector<int>>& blocks) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& b : blocks) {
            if (profile.at(b[0] - 1) != profile.at(b[1] - 1)) return;  // pairs distinct supports
            pairs.emplace_back(b[0], b[1]);
        }
        PairPartition pi(n, std::move(pairs));
        if (partitions::coloring_count_at(pi, profile, m) == 0) return;
        Rational product = 1;
        for (int i = 0; i < pi.block_count(); ++i) {
            int inn = partitions::inner_count(pi, profile, i, m);
            product *= profile.at(pi.blocks[i].first - 1).length() / Rational(inn + 1);
        }
        sum += product;
    });
    return sum;
}

Rational inner_product(const TensorState& u, const TensorState& v) {
    Rational acc = u.vacuum_coefficient() * v.vacuum_coefficient();
    for (const auto& [cu, tu] : u.terms())
        for (const auto& [cv, tv] : v.terms()) {
            if (tu.factors.size() != tv.factors.size()) continue;
            Rational product = cu * cv;
            for (std::size_t i = 0; i < tu.factors.size() && product != 0; ++i)
                product *= pairing(tu.factors[i], tv.factors[i]);
            acc += product;
        }
    return acc;
}

SupportProfile parse_profile(const std::string& text) {
    std::vector<IntervalIndicator> parts;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("profile entries must look like s:t");
        parts.emplace_back(parse_rational(item.substr(0, colon)),
                           parse_rational(item.substr(colon + 1)));
    }
    if (parts.empty()) throw std::invalid_argument("empty profile");
    return SupportProfile(std::move(parts));
}

std::string format_profile(const SupportProfile& profile) {
    std::string out;
    for (int i = 0; i < profile.size(); ++i) {
        if (i) out += ',';
        out += profile.at(i).str();
    }
    return out;
}

} // namespace monohier::fock
