#include "monohier/verify.hpp"

#include "monohier/fock.hpp"
#include "monohier/multipoly.hpp"
#include "monohier/rng.hpp"
#include "monohier/spectra.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <future>
#include <sstream>

namespace monohier::verify {

namespace {

using partitions::IntervalIndicator;
using partitions::OrderedPartition;
using partitions::PairPartition;
using partitions::SupportProfile;

// A check returns an empty string on success, a failure detail otherwise.
struct NamedCheck {
    std::string suite;
    std::string name;
    std::function<std::string()> run;
};

template <class T>
std::string expect_equal(const T& got, const T& want, const std::string& what) {
    if (got == want) return {};
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    return os.str();
}

std::string expect_near(double got, double want, double tol, const std::string& what) {
    if (std::abs(got - want) <= tol) return {};
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want << " (tol " << tol << ")";
    return os.str();
}

const std::vector<Level> kTableLevels = {Level::finite(1), Level::finite(2), Level::finite(3),
                                         Level::finite(4), Level::infinity()};

// Frozen low-order central limit moments, rows over kTableLevels,
// columns n = 2, 4, 6, 8, 10.
const char* kTableCells[5][5] = {
    {"1", "3/2", "5/2", "35/8", "63/8"},
    {"1", "2", "9/2", "21/2", "199/8"},
    {"1", "2", "5", "27/2", "75/2"},
    {"1", "2", "5", "14", "83/2"},
    {"1", "2", "5", "14", "42"},
};

std::string check_table_grid() {
    for (int row = 0; row < 5; ++row)
        for (int col = 0; col < 5; ++col) {
            int n = 2 * (col + 1);
            Rational got = spectra::central_moment(kTableLevels[row], n);
            Rational want = parse_rational(kTableCells[row][col]);
            if (got != want)
                return "moment m=" + kTableLevels[row].str() + " n=" + std::to_string(n) +
                       ": got " + format_rational(got) + ", want " + format_rational(want);
        }
    return {};
}

std::string check_three_routes() {
    using namespace std::complex_literals;
    for (const auto& m : kTableLevels) {
        auto seq = spectra::jacobi_for(m);
        for (int n = 0; n <= 10; ++n) {
            Rational combinatorial = spectra::central_moment(m, n);
            Rational tridiagonal = spectra::moments_from_jacobi(seq, n);
            if (combinatorial != tridiagonal)
                return "jacobi route mismatch at m=" + m.str() + " n=" + std::to_string(n);
        }
        // numeric route: transform value against the truncated moment series
        std::complex<double> z0(0.0, 1000.0);
        std::complex<double> series(0.0);
        for (int n = 0; n <= 10; ++n)
            series += to_double(spectra::central_moment(m, n)) / std::pow(z0, n + 1);
        std::complex<double> g = m.is_infinite()
                                     ? spectra::cauchy_continued_fraction(seq, z0, 400)
                                     : spectra::cauchy_transform(m.value(), z0);
        if (std::abs(g - series) > 1e-9)
            return "series route mismatch at m=" + m.str() + ": |diff|=" +
                   format_double17(std::abs(g - series));
        if (!m.is_infinite()) {
            for (std::complex<double> z : {std::complex<double>(0, 3), std::complex<double>(1, 2)}) {
                auto via_cf = spectra::cauchy_continued_fraction(seq, z, 600);
                auto via_recursion = spectra::cauchy_transform(m.value(), z);
                if (std::abs(via_cf - via_recursion) > 1e-12)
                    return "continued fraction mismatch at m=" + m.str();
            }
        }
    }
    return {};
}

std::string check_pair_enumeration(int max_k) {
    for (int k = 1; k <= std::min(max_k + 2, 6); ++k)
        for (const auto& m :
             {Level::finite(1), Level::finite(2), Level::finite(3), Level::infinity()}) {
            long count = 0;
            partitions::enumerate_ordered_noncrossing(2 * k, m, true,
                                                      [&](const OrderedPartition&) { ++count; });
            if (BigInt(count) != partitions::count_pair_partitions(k, m))
                return "enumeration count mismatch at k=" + std::to_string(k) + " m=" + m.str();
        }
    return {};
}

std::string check_pair_count_formulas() {
    for (int k = 0; k <= 12; ++k) {
        if (partitions::count_pair_partitions(k, Level::finite(1)) != double_factorial_odd(k))
            return "odd double factorial mismatch at k=" + std::to_string(k);
        if (partitions::count_pair_partitions(k, Level::infinity()) != factorial(k) * catalan(k))
            return "free count mismatch at k=" + std::to_string(k);
    }
    return {};
}

std::string check_level_nesting(int max_k) {
    for (int k = 1; k <= std::min(max_k + 1, 5); ++k)
        for (int m = 1; m <= 3; ++m) {
            std::string failure;
            partitions::enumerate_ordered_noncrossing(
                2 * k, Level::finite(m), true, [&](const OrderedPartition& p) {
                    if (!partitions::is_monotone_from(p, Level::finite(m + 1)))
                        failure = "level " + std::to_string(m) + " not within level " +
                                  std::to_string(m + 1);
                    if (!partitions::is_monotone_from(p, Level::infinity()))
                        failure = "level " + std::to_string(m) + " not non-crossing";
                });
            if (!failure.empty()) return failure;
        }
    return {};
}

std::string check_tuple_roundtrip(int max_k) {
    std::string failure;
    partitions::enumerate_ordered_noncrossing(
        std::min(2 * max_k, 6), Level::finite(2), false, [&](const OrderedPartition& p) {
            if (partitions::partition_from_tuple(partitions::canonical_tuple(p)) != p)
                failure = "tuple roundtrip failed";
        });
    return failure;
}

std::string check_block_counts() {
    for (int n = 1; n <= 6; ++n)
        for (const auto& m :
             {Level::finite(1), Level::finite(2), Level::finite(3), Level::infinity()}) {
            std::vector<long> by_blocks(n + 1, 0);
            partitions::enumerate_ordered_noncrossing(
                n, m, false, [&](const OrderedPartition& p) { ++by_blocks[p.block_count()]; });
            for (int q = 1; q <= n; ++q)
                if (BigInt(by_blocks[q]) != partitions::count_partitions_by_blocks(n, q, m))
                    return "block count mismatch n=" + std::to_string(n) +
                           " q=" + std::to_string(q) + " m=" + m.str();
        }
    return {};
}

MultiPoly mu(int algebra, int order) {
    return MultiPoly::variable(states::moment_variable(algebra, order));
}

std::string check_monotone_examples() {
    auto m1 = Level::finite(1);
    auto aba = states::evaluate_word_symbolic(states::parse_word("a1 b2 a1"), m1);
    if (aba != mu(1, 2) * mu(2, 1)) return "phi(aba) != phi(a^2) phi(b): " + aba.str();
    auto bab = states::evaluate_word_symbolic(states::parse_word("b2 a1 b2"), m1);
    if (bab != mu(2, 1) * mu(2, 1) * mu(1, 1)) return "phi(bab) != phi(b)^2 phi(a): " + bab.str();
    return {};
}

std::string check_order_five_moment() {
    auto m2 = Level::finite(2);
    auto got = states::evaluate_word_symbolic(states::parse_word("a1 b2 a1 b2 a1"), m2);
    auto a1 = mu(1, 1), b1 = mu(2, 1);
    auto want = a1 * a1 * a1 * mu(2, 2) - a1 * a1 * a1 * b1 * b1 + mu(1, 3) * b1 * b1;
    if (got != want) return "phi(ababa) at level 2: " + got.str();
    auto abab = states::evaluate_word_symbolic(states::parse_word("a1 b2 a1 b2"), m2);
    auto want4 = mu(1, 2) * b1 * b1 + mu(2, 2) * a1 * a1 - a1 * a1 * b1 * b1;
    if (abab != want4) return "phi(abab) at level 2: " + abab.str();
    return {};
}

states::AlgebraRegistry seeded_registry(std::uint64_t seed, int algebras, int max_order) {
    states::AlgebraRegistry registry;
    for (int i = 1; i <= algebras; ++i)
        registry.add(random_marginal(seed + 1000 * i, i, 3, max_order));
    return registry;
}

std::string check_cross_engine(std::uint64_t seed, int word_len, std::size_t basis_cap) {
    auto registry = seeded_registry(seed, 2, 2 * word_len + 2);
    std::vector<states::AlgebraSpec> specs{registry.at(1), registry.at(2)};
    for (const auto& m : {Level::finite(1), Level::finite(2), Level::infinity()}) {
        states::ProductSpaceOptions options;
        options.basis_cap = basis_cap;
        if (m.is_infinite()) options.max_tensor_len = word_len;
        states::ProductSpace space(m, specs, options);
        for (int len = 1; len <= word_len; ++len)
            for (int mask = 0; mask < (1 << len); ++mask) {
                states::Word word;
                for (int p = 0; p < len; ++p)
                    word.push_back(states::WordLetter::generator(((mask >> p) & 1) + 1));
                Rational rewritten = states::evaluate_word(word, m, registry);
                Rational represented = states::vacuum_moment(space, word);
                if (rewritten != represented)
                    return "engine mismatch at m=" + m.str() + " len=" + std::to_string(len) +
                           " mask=" + std::to_string(mask);
            }
    }
    return {};
}

std::string check_short_word_free_agreement() {
    for (int m = 1; m <= 3; ++m)
        for (int len = 1; len <= 2 * m; ++len)
            for (int mask = 0; mask < (1 << len); ++mask) {
                states::Word word;
                for (int p = 0; p < len; ++p)
                    word.push_back(states::WordLetter::generator(((mask >> p) & 1) + 1));
                auto at_m = states::evaluate_word_symbolic(word, Level::finite(m));
                auto free = states::evaluate_word_symbolic(word, Level::infinity());
                if (at_m != free)
                    return "length " + std::to_string(len) + " word differs from free at m=" +
                           std::to_string(m);
            }
    return {};
}

std::string check_density_closed_forms() {
    for (int i = 0; i <= 200; ++i) {
        double x = -1.5 + 3.0 * i / 200.0;
        double f2 = spectra::density(2, x);
        double f3 = spectra::density(3, x);
        double inside = 2.0 - x * x;
        double want2 = inside <= 0 ? 0.0 : std::sqrt(inside) / M_PI / (1.0 + x * x * inside);
        double want3 = inside <= 0
                           ? 0.0
                           : std::sqrt(inside) / M_PI /
                                 (x * x + (x * x - 1) * (x * x - 1) * inside);
        if (auto err = expect_near(f2, want2, 1e-12, "density m=2 at x=" + format_double17(x));
            !err.empty())
            return err;
        if (auto err = expect_near(f3, want3, 1e-12, "density m=3 at x=" + format_double17(x));
            !err.empty())
            return err;
    }
    return {};
}

std::string check_atoms() {
    auto a2 = spectra::atoms(2);
    if (a2.size() != 2) return "level 2 should have one symmetric atom pair";
    double loc = std::sqrt(std::sqrt(2.0) + 1.0);
    double mass = (2.0 - std::sqrt(2.0)) / 4.0;
    if (auto err = expect_near(a2[1].location, loc, 1e-10, "atom location m=2"); !err.empty())
        return err;
    if (auto err = expect_near(a2[0].location, -loc, 1e-10, "mirror atom location m=2");
        !err.empty())
        return err;
    if (auto err = expect_near(a2[1].mass, mass, 1e-9, "atom mass m=2"); !err.empty()) return err;

    auto a3 = spectra::atoms(3);
    if (a3.size() != 2) return "level 3 should have one symmetric atom pair";
    if (auto err = expect_near(a3[1].location, 1.685, 5e-3, "atom location m=3"); !err.empty())
        return err;
    if (auto err = expect_near(a3[1].mass, 0.099, 2e-3, "atom mass m=3"); !err.empty()) return err;

    if (!spectra::atoms(1).empty()) return "arcsine law must have no atoms";
    return {};
}

std::string check_total_mass() {
    for (int m = 1; m <= 4; ++m)
        if (auto err = expect_near(spectra::measure_total_mass(m), 1.0, 1e-6,
                                   "total mass m=" + std::to_string(m));
            !err.empty())
            return err;
    return {};
}

std::string check_herglotz_grid() {
    for (int m = 1; m <= 4; ++m)
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j) {
                std::complex<double> z(-3.0 + 6.0 * i / 19.0, 3.0 * (j + 1) / 20.0);
                if (spectra::cauchy_transform(m, z).imag() >= 0)
                    return "transform not Herglotz at m=" + std::to_string(m);
            }
    return {};
}

std::string check_measure_moments() {
    for (int m : {2, 3})
        for (int n = 0; n <= 8; ++n) {
            double want = to_double(spectra::central_moment(Level::finite(m), n));
            if (auto err = expect_near(spectra::measure_moment(m, n), want, 1e-6,
                                       "measure moment m=" + std::to_string(m) +
                                           " n=" + std::to_string(n));
                !err.empty())
                return err;
        }
    return {};
}

std::string check_fock_cross_route(std::uint64_t seed, int max_k) {
    const std::vector<Level> levels{Level::finite(1), Level::finite(2), Level::finite(3)};
    // exhaustive equal-support case
    for (int k = 1; k <= std::max(2, max_k); ++k) {
        SupportProfile equal(std::vector<IntervalIndicator>(2 * k, IntervalIndicator(0, 1)));
        for (const auto& m : levels) {
            Rational gaussian = fock::gaussian_moment(m, equal);
            Rational combinatorial = fock::partition_sum_moment(m, equal);
            if (gaussian != combinatorial)
                return "equal-support mismatch at 2k=" + std::to_string(2 * k) + " m=" + m.str();
            if (gaussian != spectra::central_moment(m, 2 * k))
                return "gaussian moment differs from central moment at m=" + m.str();
        }
    }
    auto corpus = random_profiles(seed, 60, 2 * max_k + 2, 3);
    for (const auto& profile : corpus)
        for (const auto& m : levels) {
            Rational gaussian = fock::gaussian_moment(m, profile);
            Rational combinatorial = fock::partition_sum_moment(m, profile);
            if (gaussian != combinatorial)
                return "profile " + fock::format_profile(profile) + " mismatch at m=" + m.str();
            Rational weighted = fock::inner_weighted_sum_moment(m, profile);
            if (gaussian != weighted)
                return "inner-weighted route mismatch on " + fock::format_profile(profile) +
                       " at m=" + m.str();
        }
    return {};
}

std::string check_pair_word_closed_form(std::uint64_t seed, int max_k) {
    auto corpus = random_profiles(seed + 7, 40, 2 * std::min(max_k, 4), 3);
    const std::vector<Level> levels{Level::finite(1), Level::finite(2), Level::finite(3)};
    for (const auto& profile : corpus) {
        const int n = profile.size();
        std::string failure;
        partitions::enumerate_noncrossing_unordered(
            n, true, [&](const std::vector<std::vector<int>>& blocks) {
                if (!failure.empty()) return;
                std::vector<std::pair<int, int>> pairs;
                for (const auto& b : blocks) {
                    if (profile.at(b[0] - 1) != profile.at(b[1] - 1)) return;
                    pairs.emplace_back(b[0], b[1]);
                }
                PairPartition pi(n, std::move(pairs));
                for (const auto& m : levels) {
                    Rational calculus = fock::pair_partition_expectation(m, pi, profile);
                    BigInt colorings = partitions::coloring_count_at(pi, profile, m);
                    if (colorings == 0) {
                        if (calculus != 0)
                            failure = "infeasible support order must annihilate: " +
                                      fock::format_profile(profile);
                        continue;
                    }
                    Rational closed = 1;
                    for (int i = 0; i < pi.block_count(); ++i) {
                        int inn = partitions::inner_count(pi, profile, i, m);
                        closed *= profile.at(pi.blocks[i].first - 1).length() / Rational(inn + 1);
                    }
                    if (calculus != closed)
                        failure = "closed form mismatch on " + fock::format_profile(profile) +
                                  " at m=" + m.str();
                    // admissible colorings against the inner-block product
                    Rational b_factorials = 1;
                    for (const auto& group : profile.groups()) {
                        int in_pairs = 0;
                        for (const auto& [a, b] : pi.blocks)
                            if (profile.at(a - 1) == group.support) ++in_pairs;
                        b_factorials *= Rational(factorial(in_pairs));
                    }
                    if (m == Level::finite(1)) {
                        Rational inn_product = 1;
                        for (int i = 0; i < pi.block_count(); ++i)
                            inn_product /=
                                Rational(partitions::inner_count(pi, profile, i, m) + 1);
                        if (Rational(colorings) != b_factorials * inn_product)
                            failure = "coloring count identity fails on " +
                                      fock::format_profile(profile);
                    }
                }
            });
        if (!failure.empty()) return failure;
    }
    return {};
}

std::string check_fock_nested_example() {
    // diagram {1,8},{2,3},{4,7},{5,6} with outer support (0,t] and inner (t,t']
    Rational t(2, 3), tp(7, 4);
    IntervalIndicator f(0, t), g(t, tp);
    SupportProfile profile({f, g, g, f, g, g, f, f});
    PairPartition pi(8, {{1, 8}, {2, 3}, {4, 7}, {5, 6}});
    Rational want = t * t * (tp - t) * (tp - t) / 2;
    Rational got = fock::pair_partition_expectation(Level::finite(1), pi, profile);
    if (got != want)
        return "nested pair-word expectation: got " + format_rational(got) + ", want " +
               format_rational(want);
    // two admissible colorings; the coloring-count identity gives 2!2!/2
    if (partitions::coloring_count(pi, profile) != 2) return "admissible coloring count != 2";
    Rational full = fock::gaussian_moment(Level::finite(1), profile);
    if (full != Rational(3, 2) * t * t * (tp - t) * (tp - t))
        return "moment over both compatible diagrams: got " + format_rational(full);
    return {};
}

std::string check_adjointness(std::uint64_t seed) {
    SplitMix64 rng(seed + 99);
    // disjoint decreasing-support factors keep the pairing factorized
    std::vector<IntervalIndicator> slots{IntervalIndicator(3, 4), IntervalIndicator(2, 3),
                                         IntervalIndicator(1, 2), IntervalIndicator(0, 1)};
    for (const auto& m : {Level::finite(1), Level::finite(2)})
        for (int trial = 0; trial < 20; ++trial) {
            auto rand_state = [&](int max_len) {
                fock::TensorState s = fock::TensorState::vacuum(Rational(rng.range(-2, 2)));
                for (int t = 0; t < 2; ++t) {
                    int len = rng.range(1, max_len);
                    fock::SimpleTensor tensor;
                    for (int i = 0; i < len; ++i)
                        tensor.factors.push_back(
                            fock::PiecewisePolynomial::indicator(slots[slots.size() - len + i]));
                    s.add_term(Rational(rng.range(-3, 3)), std::move(tensor));
                }
                s.canonicalize();
                return s;
            };
            auto u = rand_state(3);
            auto v = rand_state(4);
            int which = rng.range(0, 3);
            const auto& f = slots[which];
            Rational lhs = fock::inner_product(fock::create(m, f, u), v);
            Rational rhs = fock::inner_product(u, fock::annihilate(m, f, v));
            if (lhs != rhs) return "adjointness fails at m=" + m.str();
        }
    return {};
}

std::string check_poisson_series() {
    for (int m : {2, 3}) {
        auto series = spectra::poisson_series(m, 6);
        for (int n = 0; n <= 6; ++n)
            if (series.moment(n) != spectra::poisson_moment(Level::finite(m), n))
                return "series coefficient mismatch at m=" + std::to_string(m) +
                       " n=" + std::to_string(n);
    }
    return {};
}

std::string check_poisson_sanity() {
    for (const auto& m : {Level::finite(1), Level::finite(2), Level::finite(3)}) {
        Polynomial lambda = Polynomial::monomial(1, 1);
        Polynomial lambda2 = Polynomial::monomial(1, 2);
        if (spectra::poisson_moment(m, 1) != lambda) return "first moment must be lambda";
        if (spectra::poisson_moment(m, 2) != lambda + lambda2)
            return "second moment must be lambda + lambda^2";
    }
    return {};
}

std::vector<NamedCheck> build_checks(const std::string& suite, const Options& options) {
    std::vector<NamedCheck> checks;
    auto want = [&suite](const char* name) { return suite == "all" || suite == name; };
    if (want("moments")) {
        checks.push_back({"moments", "table-grid", check_table_grid});
        checks.push_back({"moments", "three-routes", check_three_routes});
    }
    if (want("partitions")) {
        int k = options.max_k;
        checks.push_back({"partitions", "pair-enumeration", [k] { return check_pair_enumeration(k); }});
        checks.push_back({"partitions", "pair-count-formulas", check_pair_count_formulas});
        checks.push_back({"partitions", "level-nesting", [k] { return check_level_nesting(k); }});
        checks.push_back({"partitions", "tuple-roundtrip", [k] { return check_tuple_roundtrip(k); }});
        checks.push_back({"partitions", "block-counts", check_block_counts});
    }
    if (want("states")) {
        auto seed = options.seed;
        int len = options.word_len;
        auto cap = options.basis_cap;
        checks.push_back({"states", "monotone-examples", check_monotone_examples});
        checks.push_back({"states", "order-five-moment", check_order_five_moment});
        checks.push_back({"states", "cross-engine",
                          [seed, len, cap] { return check_cross_engine(seed, len, cap); }});
        checks.push_back({"states", "short-words-free", check_short_word_free_agreement});
    }
    if (want("spectra")) {
        checks.push_back({"spectra", "density-closed-forms", check_density_closed_forms});
        checks.push_back({"spectra", "atoms", check_atoms});
        checks.push_back({"spectra", "total-mass", check_total_mass});
        checks.push_back({"spectra", "herglotz-grid", check_herglotz_grid});
        checks.push_back({"spectra", "measure-moments", check_measure_moments});
    }
    if (want("fock")) {
        auto seed = options.seed;
        int k = options.max_k;
        checks.push_back({"fock", "cross-route", [seed, k] { return check_fock_cross_route(seed, k); }});
        checks.push_back({"fock", "pair-word-closed-form",
                          [seed, k] { return check_pair_word_closed_form(seed, k); }});
        checks.push_back({"fock", "nested-example", check_fock_nested_example});
        checks.push_back({"fock", "adjointness", [seed] { return check_adjointness(seed); }});
    }
    if (want("poisson")) {
        checks.push_back({"poisson", "series-coefficients", check_poisson_series});
        checks.push_back({"poisson", "moment-sanity", check_poisson_sanity});
    }
    return checks;
}

CheckResult execute(const NamedCheck& check) {
    CheckResult result;
    result.suite = check.suite;
    result.name = check.name;
    auto start = std::chrono::steady_clock::now();
    try {
        result.detail = check.run();
        result.passed = result.detail.empty();
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"moments", "partitions", "states", "spectra", "fock", "poisson"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const Options& options) {
    auto checks = build_checks(suite, options);
    if (checks.empty()) throw std::invalid_argument("unknown verification suite: " + suite);
    std::vector<CheckResult> results;
    if (options.parallel) {
        std::vector<std::future<CheckResult>> futures;
        for (const auto& check : checks)
            futures.push_back(std::async(std::launch::async, [&check] { return execute(check); }));
        for (auto& f : futures) results.push_back(f.get());
    } else {
        for (const auto& check : checks) results.push_back(execute(check));
    }
    return results;
}

std::vector<partitions::SupportProfile> random_profiles(std::uint64_t seed, int count,
                                                        int max_len, int max_intervals) {
    SplitMix64 rng(seed);
    std::vector<partitions::SupportProfile> out;
    while (static_cast<int>(out.size()) < count) {
        Rational e0 = 0;
        std::vector<IntervalIndicator> pool;
        for (int i = 0; i < max_intervals; ++i) {
            Rational e1 = e0 + make_rational(rng.range(1, 4), rng.range(1, 4));
            pool.emplace_back(e0, e1);
            e0 = e1;
        }
        int len = 2 * rng.range(1, std::max(1, max_len / 2));
        std::vector<IntervalIndicator> parts;
        for (int p = 0; p < len; ++p) parts.push_back(pool[rng.below(pool.size())]);
        out.emplace_back(std::move(parts));
    }
    return out;
}

states::AlgebraSpec random_marginal(std::uint64_t seed, int index, int dimension, int max_order) {
    SplitMix64 rng(seed);
    std::vector<Rational> alpha, beta;
    for (int k = 0; k < dimension; ++k)
        alpha.push_back(make_rational(rng.range(-2, 2), rng.range(1, 3)));
    for (int k = 0; k + 1 < dimension; ++k)
        beta.push_back(make_rational(rng.range(1, 4), rng.range(1, 3)));
    return states::AlgebraSpec::from_jacobi(index, alpha, beta, max_order);
}

} // namespace monohier::verify
