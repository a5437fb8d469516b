#include "monohier/partitions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace monohier::partitions {

OrderedPartition::OrderedPartition(int ground_size, std::vector<std::vector<int>> colored_blocks)
    : n(ground_size), blocks(std::move(colored_blocks)) {
    if (n < 1) throw std::invalid_argument("partition ground set must be non-empty");
    std::vector<bool> seen(n + 1, false);
    int covered = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("partition blocks must be non-empty");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            if (e < 1 || e > n || seen[e])
                throw std::invalid_argument("partition blocks must be disjoint subsets of {1..n}");
            seen[e] = true;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("partition blocks must cover {1..n}");
}

PairPartition::PairPartition(int ground_size, std::vector<std::pair<int, int>> pair_blocks)
    : n(ground_size), blocks(std::move(pair_blocks)) {
    if (n % 2 != 0) throw std::invalid_argument("pair partition needs an even ground set");
    std::vector<bool> seen(n + 1, false);
    for (auto& [a, b] : blocks) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n || a == b || seen[a] || seen[b])
            throw std::invalid_argument("invalid pair partition");
        seen[a] = seen[b] = true;
    }
    if (2 * block_count() != n) throw std::invalid_argument("pair partition must cover {1..n}");
    std::sort(blocks.begin(), blocks.end());
    std::vector<std::vector<int>> as_blocks;
    for (auto& [a, b] : blocks) as_blocks.push_back({a, b});
    if (!is_noncrossing(OrderedPartition(n, as_blocks)))
        throw std::invalid_argument("pair partition must be non-crossing");
}

IntervalIndicator::IntervalIndicator(Rational s, Rational t) : lower(std::move(s)), upper(std::move(t)) {
    if (lower < 0 || !(lower < upper))
        throw std::invalid_argument("interval indicator needs 0 <= lower < upper");
}

SupportProfile::SupportProfile(std::vector<IntervalIndicator> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (std::size_t j = i + 1; j < parts_.size(); ++j)
            if (parts_[i] != parts_[j] && !parts_[i].disjoint_from(parts_[j]))
                throw std::invalid_argument("profile supports must be pairwise identical or disjoint");
    for (int i = 0; i < size(); ++i) {
        auto it = std::find_if(groups_.begin(), groups_.end(),
                               [&](const Group& g) { return g.support == parts_[i]; });
        if (it == groups_.end())
            groups_.push_back(Group{parts_[i], {i}});
        else
            it->positions.push_back(i);
    }
    std::sort(groups_.begin(), groups_.end(), [](const Group& a, const Group& b) {
        return a.support.strictly_below(b.support);
    });
}

bool is_noncrossing(const OrderedPartition& p) {
    // s < r < s' < r' with s,s' in one block and r,r' in another
    const int k = p.block_count();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const auto& bi = p.blocks[i];
            const auto& bj = p.blocks[j];
            for (std::size_t a = 0; a + 1 < bi.size(); ++a) {
                // any element of bj strictly between two consecutive-or-not
                // elements of bi, and another one above bi's upper element
                int s = bi[a], s2 = bi[a + 1];
                bool between = std::any_of(bj.begin(), bj.end(),
                                           [&](int r) { return s < r && r < s2; });
                bool above = std::any_of(bj.begin(), bj.end(),
                                         [&](int r) { return r > s2; });
                if (between && above) return false;
            }
        }
    return true;
}

namespace {

// block j outer to block i per the gap definition (valid for crossing too)
bool nested_in(const std::vector<int>& outer, const std::vector<int>& inner) {
    for (std::size_t a = 0; a + 1 < outer.size(); ++a) {
        int p = outer[a], q = outer[a + 1];
        if (p < inner.front() && inner.back() < q) return true;
    }
    return false;
}

std::vector<std::vector<bool>> nesting_matrix(const std::vector<std::vector<int>>& blocks) {
    const int k = static_cast<int>(blocks.size());
    std::vector<std::vector<bool>> nested(k, std::vector<bool>(k, false));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            if (i != j) nested[j][i] = nested_in(blocks[j], blocks[i]);
    return nested;
}

std::vector<int> depths_from_nesting(const std::vector<std::vector<bool>>& nested) {
    const int k = static_cast<int>(nested.size());
    std::vector<int> d(k, 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (nested[j][i]) ++d[i];
    return d;
}

} // namespace

PartitionClass classify(const OrderedPartition& p) {
    PartitionClass c;
    c.noncrossing = is_noncrossing(p);
    c.pair = std::all_of(p.blocks.begin(), p.blocks.end(),
                         [](const std::vector<int>& b) { return b.size() == 2; });
    c.nested = nesting_matrix(p.blocks);
    if (c.noncrossing) c.depth = depths_from_nesting(c.nested);
    return c;
}

int depth(const OrderedPartition& p, int block) {
    if (block < 0 || block >= p.block_count()) throw std::out_of_range("block index out of range");
    auto c = classify(p);
    if (!c.noncrossing) throw std::invalid_argument("depth is undefined for crossing partitions");
    return c.depth[block];
}

bool is_monotone_from(const OrderedPartition& p, Level m) {
    auto c = classify(p);
    if (!c.noncrossing) return false;
    if (m.is_infinite()) return true;
    const int k = p.block_count();
    for (int j = 0; j < k; ++j) {
        if (!m.constrains_depth(c.depth[j])) continue;
        for (int i = 0; i < k; ++i)
            if (c.nested[j][i] && j >= i) return false;
    }
    return true;
}

namespace {

using Blocks = std::vector<std::vector<int>>;

// Recursive generation of unordered non-crossing partitions by the block of
// the smallest element of each remaining contiguous segment.
class NoncrossingEnumerator {
public:
    NoncrossingEnumerator(bool pairs_only, const std::function<void(const Blocks&)>& fn)
        : pairs_only_(pairs_only), fn_(fn) {}

    void run(int lo, int hi) {
        segment(lo, hi, [&] { fn_(acc_); });
    }

private:
    void segment(int lo, int hi, const std::function<void()>& k) {
        if (lo > hi) {
            k();
            return;
        }
        std::vector<int> block{lo};
        std::vector<std::pair<int, int>> gaps;
        extend(lo, hi, block, gaps, k);
    }

    // The open block currently ends at `last`. Either close it (emitting the
    // tail segment as a final gap) or append another element.
    void extend(int last, int hi, std::vector<int>& block,
                std::vector<std::pair<int, int>>& gaps, const std::function<void()>& k) {
        if (!pairs_only_ || block.size() == 2) {
            gaps.emplace_back(last + 1, hi);
            acc_.push_back(block);
            chain(0, gaps, k);
            acc_.pop_back();
            gaps.pop_back();
            if (pairs_only_) return;
        }
        for (int p = last + 1; p <= hi; ++p) {
            block.push_back(p);
            gaps.emplace_back(last + 1, p - 1);
            extend(p, hi, block, gaps, k);
            gaps.pop_back();
            block.pop_back();
        }
    }

    void chain(std::size_t idx, std::vector<std::pair<int, int>>& gaps,
               const std::function<void()>& k) {
        if (idx == gaps.size()) {
            k();
            return;
        }
        segment(gaps[idx].first, gaps[idx].second, [&, idx] { chain(idx + 1, gaps, k); });
    }

    bool pairs_only_;
    const std::function<void(const Blocks&)>& fn_;
    Blocks acc_;
};

// Emits all admissible color vectors in lexicographic order. colors are
// chosen block by block in canonical order (ascending smallest element), so
// every active outer block is colored before its inner blocks.
void emit_colorings(const Blocks& blocks, const std::vector<std::vector<bool>>& nested,
                    const std::vector<int>& depths, Level m,
                    const std::function<void(const std::vector<int>&)>& emit) {
    const int p = static_cast<int>(blocks.size());
    std::vector<std::vector<int>> ancestors(p);  // active outer blocks of each block
    for (int j = 0; j < p; ++j)
        if (m.constrains_depth(depths[j]))
            for (int i = 0; i < p; ++i)
                if (nested[j][i]) ancestors[i].push_back(j);

    std::vector<int> color(p, 0);
    std::vector<bool> used(p + 1, false);
    auto rec = [&](auto&& self, int b) -> void {
        if (b == p) {
            emit(color);
            return;
        }
        for (int c = 1; c <= p; ++c) {
            if (used[c]) continue;
            bool ok = std::all_of(ancestors[b].begin(), ancestors[b].end(),
                                  [&](int a) { return color[a] < c; });
            if (!ok) continue;
            used[c] = true;
            color[b] = c;
            self(self, b + 1);
            used[c] = false;
        }
        color[b] = 0;
    };
    rec(rec, 0);
}

Blocks sorted_by_min(Blocks blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    return blocks;
}

} // namespace

void enumerate_noncrossing_unordered(int n, bool pairs_only,
                                     const std::function<void(const Blocks&)>& fn) {
    if (n < 1) throw std::invalid_argument("ground set must be non-empty");
    if (pairs_only && n % 2 != 0) return;
    std::function<void(const Blocks&)> emit = [&](const Blocks& raw) { fn(sorted_by_min(raw)); };
    NoncrossingEnumerator(pairs_only, emit).run(1, n);
}

void enumerate_ordered_noncrossing(int n, Level m, bool pairs_only,
                                   const std::function<void(const OrderedPartition&)>& fn) {
    enumerate_noncrossing_unordered(n, pairs_only, [&](const Blocks& blocks) {
        auto nested = nesting_matrix(blocks);
        auto depths = depths_from_nesting(nested);
        emit_colorings(blocks, nested, depths, m, [&](const std::vector<int>& color) {
            Blocks ordered(blocks.size());
            for (std::size_t b = 0; b < blocks.size(); ++b) ordered[color[b] - 1] = blocks[b];
            fn(OrderedPartition(n, std::move(ordered)));
        });
    });
}

std::vector<OrderedPartition> enumerate_ordered_noncrossing(int n, Level m, bool pairs_only) {
    std::vector<OrderedPartition> out;
    enumerate_ordered_noncrossing(n, m, pairs_only,
                                  [&](const OrderedPartition& p) { out.push_back(p); });
    return out;
}

BigInt admissible_coloring_count(const Blocks& blocks, Level m) {
    auto nested = nesting_matrix(blocks);
    auto depths = depths_from_nesting(nested);
    const int p = static_cast<int>(blocks.size());
    // Linear extensions of the active nesting forest: p! / prod of
    // (1 + #blocks nested inside) over constrained blocks.
    BigInt denom = 1;
    for (int j = 0; j < p; ++j) {
        if (!m.constrains_depth(depths[j])) continue;
        int sub = 1;
        for (int i = 0; i < p; ++i)
            if (nested[j][i]) ++sub;
        denom *= sub;
    }
    return factorial(p) / denom;
}

BigInt count_pair_partitions(int k, Level m) {
    if (k < 0) throw std::invalid_argument("negative pair count");
    if (k == 0) return 1;
    if (m.is_infinite()) return factorial(k) * catalan(k);
    if (m.value() == 1) return double_factorial_odd(k);

    // table[j][kk] = count at level j+1 for kk pairs
    const int levels = m.value();
    std::vector<std::vector<BigInt>> table(levels, std::vector<BigInt>(k + 1));
    for (int kk = 0; kk <= k; ++kk) table[0][kk] = double_factorial_odd(kk);
    for (int lvl = 1; lvl < levels; ++lvl) {
        table[lvl][0] = 1;
        for (int np = 1; np <= k; ++np) {
            // split on the pair {1, 2j}: j-1 pairs inside (one level deeper),
            // np-j pairs outside; j color choices for the splitting pair
            BigInt total = 0;
            for (int j = 1; j <= np; ++j)
                total += BigInt(j) * binomial(np, j) * table[lvl - 1][j - 1] * table[lvl][np - j];
            table[lvl][np] = total;
        }
    }
    return table[levels - 1][k];
}

namespace {

// level-1 counts by block number, aggregated over all unordered diagrams
std::vector<BigInt> monotone_block_counts(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<BigInt>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> byq(n + 1, BigInt(0));
    enumerate_noncrossing_unordered(n, false, [&](const Blocks& blocks) {
        byq[blocks.size()] += admissible_coloring_count(blocks, Level::finite(1));
    });
    cache[n] = byq;
    return byq;
}

// Recurrence tables in color-divided form: hat(n, q) = count / q!.
class BlockCountTable {
public:
    explicit BlockCountTable(int level) : level_(level) {
        if (level_ > 1) inner_ = std::make_unique<BlockCountTable>(level_ - 1);
    }

    Rational hat(int n, int q) {
        if (n == 0) return q == 0 ? 1 : 0;
        if (q < 1 || q > n) return 0;
        auto key = std::make_pair(n, q);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Rational value;
        if (level_ == 1) {
            value = Rational(monotone_block_counts(n)[q]) / Rational(factorial(q));
        } else {
            // Split on the block of element 1 (r elements, r-1 inner gaps and
            // one tail segment); inner gaps sit one level deeper. Colors are
            // distributed over the segments, the splitting block taking any
            // of the q colors; dividing by q! turns the multinomial
            // color-splitting weights into a plain convolution.
            Rational total = 0;
            for (int r = 1; r <= n; ++r) {
                int rest = n - r;  // elements outside the splitting block
                for (int tail = 0; tail <= rest; ++tail)
                    for (int qt = 0; qt <= q - 1; ++qt) {
                        Rational t = hat(tail, qt);
                        if (t == 0) continue;
                        Rational g = gaps(r - 1, rest - tail, q - 1 - qt);
                        if (g == 0) continue;
                        total += t * g;
                    }
            }
            value = total;
        }
        memo_[key] = value;
        return value;
    }

private:
    // convolution of `parts` inner-gap tables with total size and colors fixed
    Rational gaps(int parts, int size, int colors) {
        if (parts == 0) return size == 0 && colors == 0 ? 1 : 0;
        if (size < 0 || colors < 0) return 0;
        auto key = std::make_tuple(parts, size, colors);
        auto it = gaps_memo_.find(key);
        if (it != gaps_memo_.end()) return it->second;
        Rational total = 0;
        for (int s = 0; s <= size; ++s)
            for (int c = 0; c <= colors; ++c) {
                Rational f = inner_->hat(s, c);
                if (f == 0) continue;
                Rational rest = gaps(parts - 1, size - s, colors - c);
                if (rest == 0) continue;
                total += f * rest;
            }
        gaps_memo_[key] = total;
        return total;
    }

    int level_;
    std::unique_ptr<BlockCountTable> inner_;
    std::map<std::pair<int, int>, Rational> memo_;
    std::map<std::tuple<int, int, int>, Rational> gaps_memo_;
};

} // namespace

BigInt count_partitions_by_blocks(int n, int q, Level m) {
    if (n < 1 || q < 1 || q > n) throw std::invalid_argument("need 1 <= q <= n");
    if (m.is_infinite()) return factorial(q) * narayana(n, q);
    if (m.value() == 1) return monotone_block_counts(n)[q];
    BlockCountTable table(m.value());
    Rational hat = table.hat(n, q) * Rational(factorial(q));
    if (hat.get_den() != 1) throw std::logic_error("block count recurrence produced a non-integer");
    return BigInt(hat.get_num());
}

OrderedPartition partition_from_tuple(const std::vector<int>& indices) {
    if (indices.empty()) throw std::invalid_argument("empty index tuple");
    std::vector<int> values = indices;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Blocks blocks(values.size());
    for (int s = 0; s < static_cast<int>(indices.size()); ++s) {
        auto pos = std::lower_bound(values.begin(), values.end(), indices[s]) - values.begin();
        blocks[pos].push_back(s + 1);
    }
    return OrderedPartition(static_cast<int>(indices.size()), std::move(blocks));
}

std::vector<int> canonical_tuple(const OrderedPartition& p) {
    std::vector<int> indices(p.n);
    for (int color = 0; color < p.block_count(); ++color)
        for (int e : p.blocks[color]) indices[e - 1] = color + 1;
    return indices;
}

bool is_compatible(const OrderedPartition& p, const SupportProfile& profile) {
    if (profile.size() != p.n)
        throw std::invalid_argument("profile length must match the ground set");
    for (const auto& block : p.blocks)
        for (std::size_t a = 1; a < block.size(); ++a)
            if (profile.at(block[a] - 1) != profile.at(block[0] - 1)) return false;
    for (int k = 0; k < p.block_count(); ++k)
        for (int l = k + 1; l < p.block_count(); ++l)
            if (!profile.at(p.blocks[k][0] - 1).at_most(profile.at(p.blocks[l][0] - 1)))
                return false;
    return true;
}

namespace {

void check_pair_profile(const PairPartition& pi, const SupportProfile& profile) {
    if (profile.size() != pi.n)
        throw std::invalid_argument("profile length must match the ground set");
    for (auto& [a, b] : pi.blocks)
        if (profile.at(a - 1) != profile.at(b - 1))
            throw std::invalid_argument("paired positions must carry equal supports");
}

bool pair_nested(const std::pair<int, int>& outer, const std::pair<int, int>& inner) {
    return outer.first < inner.first && inner.second < outer.second;
}

} // namespace

std::vector<int> pair_block_depths(const PairPartition& pi) {
    std::vector<int> d(pi.block_count(), 1);
    for (int i = 0; i < pi.block_count(); ++i)
        for (int j = 0; j < pi.block_count(); ++j)
            if (i != j && pair_nested(pi.blocks[j], pi.blocks[i])) ++d[i];
    return d;
}

int inner_count(const PairPartition& pi, const SupportProfile& profile, int block, Level m) {
    check_pair_profile(pi, profile);
    if (block < 0 || block >= pi.block_count()) throw std::out_of_range("block index out of range");
    auto depths = pair_block_depths(pi);
    if (!m.is_infinite() && depths[block] < m.value()) return 0;
    const auto& support = profile.at(pi.blocks[block].first - 1);
    int count = 0;
    for (int j = 0; j < pi.block_count(); ++j)
        if (j != block && pair_nested(pi.blocks[block], pi.blocks[j]) &&
            profile.at(pi.blocks[j].first - 1) == support)
            ++count;
    return count;
}

BigInt coloring_count_at(const PairPartition& pi, const SupportProfile& profile, Level m) {
    check_pair_profile(pi, profile);
    const int p = pi.block_count();
    auto depths = pair_block_depths(pi);
    // predecessor lists: active nesting plus strict support order
    std::vector<std::vector<int>> before(p);
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < p; ++i) {
            if (i == j) continue;
            bool nest = pair_nested(pi.blocks[j], pi.blocks[i]) && m.constrains_depth(depths[j]);
            bool supp = profile.at(pi.blocks[j].first - 1)
                            .strictly_below(profile.at(pi.blocks[i].first - 1));
            if (nest || supp) before[i].push_back(j);
        }
    BigInt count = 0;
    std::vector<bool> placed(p, false);
    auto rec = [&](auto&& self, int assigned) -> void {
        if (assigned == p) {
            ++count;
            return;
        }
        for (int b = 0; b < p; ++b) {
            if (placed[b]) continue;
            bool ready = std::all_of(before[b].begin(), before[b].end(),
                                     [&](int a) { return placed[a]; });
            if (!ready) continue;
            placed[b] = true;
            self(self, assigned + 1);
            placed[b] = false;
        }
    };
    rec(rec, 0);
    return count;
}

BigInt coloring_count(const PairPartition& pi, const SupportProfile& profile) {
    return coloring_count_at(pi, profile, Level::finite(1));
}

std::string to_json(const OrderedPartition& p) {
    nlohmann::json j;
    j["n"] = p.n;
    j["blocks"] = p.blocks;
    return j.dump();
}

OrderedPartition partition_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    return OrderedPartition(j.at("n").get<int>(), j.at("blocks").get<Blocks>());
}

} // namespace monohier::partitions
