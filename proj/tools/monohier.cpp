// Command-line front end: tables, enumerations, densities and verification
// suites as reproducible file outputs.

#include "monohier/fock.hpp"
#include "monohier/level.hpp"
#include "monohier/partitions.hpp"
#include "monohier/spectra.hpp"
#include "monohier/states.hpp"
#include "monohier/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace monohier;

constexpr int kEnumerationCap = 12;
constexpr int kMomentOrderCap = 10;

int config_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

// output sink: file when a path is given, stdout otherwise
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output path '" + path + "'");
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::size_t basis_cap_from_env() {
    if (const char* raw = std::getenv("MONOHIER_MAX_BASIS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw std::runtime_error("MONOHIER_MAX_BASIS must be a positive integer");
    }
    return states::ProductSpaceOptions{}.basis_cap;
}

struct MomentsConfig {
    std::string m_text;  // empty = the full grid
    int max_order = kMomentOrderCap;
    std::string out, format = "csv";
};

int run_moments(const MomentsConfig& cfg) {
    if (cfg.max_order > kMomentOrderCap)
        return config_error("moment order cap is " + std::to_string(kMomentOrderCap));
    std::vector<Level> levels;
    if (cfg.m_text.empty())
        levels = {Level::finite(1), Level::finite(2), Level::finite(3), Level::finite(4),
                  Level::infinity()};
    else
        levels = {Level::parse(cfg.m_text)};
    std::vector<int> orders;
    for (int n = 2; n <= cfg.max_order; n += 2) orders.push_back(n);

    Sink sink(cfg.out);
    if (cfg.format == "csv") {
        spectra::write_moment_csv(sink.out(), levels, orders);
    } else if (cfg.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& m : levels)
            for (int n : orders) {
                Rational v = spectra::central_moment(m, n);
                rows.push_back({{"m", m.str()},
                                {"n", n},
                                {"moment_num", v.get_num().get_str()},
                                {"moment_den", v.get_den().get_str()}});
            }
        sink.out() << rows.dump(2) << "\n";
    } else {
        return config_error("unknown format '" + cfg.format + "'");
    }
    return 0;
}

struct DensityConfig {
    std::string m_text = "2";
    int points = 201;
    double margin = 0.25;
    std::string out;
};

std::string atoms_path_for(const std::string& density_path) {
    auto dot = density_path.rfind(".csv");
    if (dot != std::string::npos && dot == density_path.size() - 4)
        return density_path.substr(0, dot) + ".atoms.csv";
    return density_path + ".atoms.csv";
}

int run_density(const DensityConfig& cfg) {
    Level m = Level::parse(cfg.m_text);
    if (m.is_infinite()) return config_error("density needs a finite level");
    if (cfg.points < 1) return config_error("need at least one sample point");
    if (cfg.out.empty()) return config_error("density requires --out (two files are written)");
    {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) return config_error("cannot open output path '" + cfg.out + "'");
        spectra::write_density_csv(out, m.value(), cfg.points, cfg.margin);
    }
    {
        std::string path = atoms_path_for(cfg.out);
        std::ofstream out(path, std::ios::binary);
        if (!out) return config_error("cannot open output path '" + path + "'");
        spectra::write_atoms_csv(out, m.value());
    }
    return 0;
}

struct AtomsConfig {
    std::string m_text = "2";
    std::string out;
};

int run_atoms(const AtomsConfig& cfg) {
    Level m = Level::parse(cfg.m_text);
    if (m.is_infinite()) return config_error("atoms need a finite level");
    Sink sink(cfg.out);
    spectra::write_atoms_csv(sink.out(), m.value());
    return 0;
}

struct EnumerateConfig {
    int n = 4;
    std::string m_text = "1";
    bool pairs = false;
    std::string out, format = "json";
};

int run_enumerate(const EnumerateConfig& cfg) {
    if (cfg.n < 1 || cfg.n > kEnumerationCap)
        return config_error("enumeration cap is n <= " + std::to_string(kEnumerationCap));
    Level m = Level::parse(cfg.m_text);
    Sink sink(cfg.out);
    if (cfg.format == "json") {
        partitions::enumerate_ordered_noncrossing(cfg.n, m, cfg.pairs,
                                                  [&](const partitions::OrderedPartition& p) {
                                                      sink.out() << partitions::to_json(p) << "\n";
                                                  });
    } else if (cfg.format == "csv") {
        // counting table via the exact counting routes (no enumeration)
        sink.out() << "n,m,q,count\n";
        for (int q = 1; q <= cfg.n; ++q) {
            BigInt count;
            if (cfg.pairs)
                count = (cfg.n % 2 == 0 && q == cfg.n / 2)
                            ? partitions::count_pair_partitions(q, m)
                            : BigInt(0);
            else
                count = partitions::count_partitions_by_blocks(cfg.n, q, m);
            sink.out() << cfg.n << "," << m.str() << "," << q << "," << count.get_str() << "\n";
        }
    } else {
        return config_error("unknown format '" + cfg.format + "'");
    }
    return 0;
}

struct PoissonConfig {
    std::string m_text = "1";
    int max_order = 6;
    std::string lambda;  // empty = emit coefficients
    std::string out;
};

int run_poisson(const PoissonConfig& cfg) {
    if (cfg.max_order > kMomentOrderCap)
        return config_error("moment order cap is " + std::to_string(kMomentOrderCap));
    Level m = Level::parse(cfg.m_text);
    if (m.is_infinite()) return config_error("the Poisson table needs a finite level");
    auto series = spectra::poisson_series(m.value(), cfg.max_order);
    Sink sink(cfg.out);
    if (cfg.lambda.empty()) {
        sink.out() << "m,n,q,coeff_num,coeff_den\n";
        for (int n = 0; n <= cfg.max_order; ++n) {
            const auto& poly = series.moment(n);
            for (int q = 0; q <= poly.degree(); ++q) {
                Rational c = poly.coefficient(q);
                if (c == 0) continue;
                sink.out() << m.str() << "," << n << "," << q << "," << c.get_num().get_str()
                           << "," << c.get_den().get_str() << "\n";
            }
        }
    } else {
        Rational lambda = parse_rational(cfg.lambda);
        sink.out() << "m,n,value_num,value_den\n";
        for (int n = 0; n <= cfg.max_order; ++n) {
            Rational v = series.moment(n).evaluate(lambda);
            sink.out() << m.str() << "," << n << "," << v.get_num().get_str() << ","
                       << v.get_den().get_str() << "\n";
        }
    }
    return 0;
}

struct FockMomentConfig {
    std::string m_text = "1";
    std::string profile;
    std::string out;
};

int run_fock_moment(const FockMomentConfig& cfg) {
    Level m = Level::parse(cfg.m_text);
    auto profile = fock::parse_profile(cfg.profile);
    Rational v = fock::gaussian_moment(m, profile);
    Sink sink(cfg.out);
    sink.out() << format_rational(v) << " " << format_double17(to_double(v)) << "\n";
    return 0;
}

struct StateEvalConfig {
    std::string registry_path;
    std::string word;
    std::string m_text = "1";
    std::string out;
};

int run_state_eval(const StateEvalConfig& cfg) {
    std::ifstream in(cfg.registry_path);
    if (!in) return config_error("cannot read registry '" + cfg.registry_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto registry = states::AlgebraRegistry::from_json(buffer.str());
    Level m = Level::parse(cfg.m_text);
    auto word = states::parse_word(cfg.word);
    Rational v = states::evaluate_word(word, m, registry);
    Sink sink(cfg.out);
    sink.out() << format_rational(v) << " " << format_double17(to_double(v)) << "\n";
    return 0;
}

struct VerifyConfig {
    std::string suite = "all";
    std::uint64_t seed = 0;
    int max_k = 3;
    int word_len = 5;
    bool parallel = false;
    std::string out;
};

int run_verify(const VerifyConfig& cfg) {
    verify::Options options;
    options.seed = cfg.seed;
    options.max_k = cfg.max_k;
    options.word_len = cfg.word_len;
    options.parallel = cfg.parallel;
    options.basis_cap = basis_cap_from_env();

    auto results = verify::run_suite(cfg.suite, options);
    bool all_passed = true;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        checks.push_back({{"suite", r.suite},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"detail", r.detail},
                          {"millis", r.millis}});
        std::cerr << (r.passed ? "[pass] " : "[FAIL] ") << r.suite << "/" << r.name;
        if (!r.passed) std::cerr << ": " << r.detail;
        std::cerr << "\n";
    }
    nlohmann::json report{{"suite", cfg.suite},
                          {"seed", cfg.seed},
                          {"passed", all_passed},
                          {"checks", checks}};
    Sink sink(cfg.out);
    sink.out() << report.dump(2) << "\n";
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics, states, spectra and Fock calculus of the "
                 "monotone-to-free hierarchy"};
    app.require_subcommand(1);

    MomentsConfig moments;
    auto* cmd_moments = app.add_subcommand("moments", "Central limit moment table");
    cmd_moments->add_option("--m", moments.m_text, "Level (1,2,... or inf); default: full grid");
    cmd_moments->add_option("--max-order", moments.max_order, "Largest moment order");
    cmd_moments->add_option("--out", moments.out, "Output path (default stdout)");
    cmd_moments->add_option("--format", moments.format, "csv or json");

    DensityConfig density;
    auto* cmd_density = app.add_subcommand("density", "Density samples plus atoms file");
    cmd_density->add_option("--m", density.m_text, "Level (finite)");
    cmd_density->add_option("--points", density.points, "Number of grid samples");
    cmd_density->add_option("--margin", density.margin, "Margin beyond the support");
    cmd_density->add_option("--out", density.out, "Density CSV path (atoms CSV derived)");

    AtomsConfig atoms;
    auto* cmd_atoms = app.add_subcommand("atoms", "Atom locations and masses");
    cmd_atoms->add_option("--m", atoms.m_text, "Level (finite)");
    cmd_atoms->add_option("--out", atoms.out, "Output path (default stdout)");

    EnumerateConfig enumerate;
    auto* cmd_enumerate = app.add_subcommand("enumerate", "Colored non-crossing partitions");
    cmd_enumerate->add_option("--n", enumerate.n, "Ground set size (<= 12)");
    cmd_enumerate->add_option("--m", enumerate.m_text, "Level (1,2,... or inf)");
    cmd_enumerate->add_flag("--pairs", enumerate.pairs, "Pair partitions only");
    cmd_enumerate->add_option("--format", enumerate.format, "json (stream) or csv (counts)");
    cmd_enumerate->add_option("--out", enumerate.out, "Output path (default stdout)");

    PoissonConfig poisson;
    auto* cmd_poisson = app.add_subcommand("poisson", "Poisson limit moments in lambda");
    cmd_poisson->add_option("--m", poisson.m_text, "Level (finite)");
    cmd_poisson->add_option("--max-order", poisson.max_order, "Largest moment order");
    cmd_poisson->add_option("--lambda", poisson.lambda, "Evaluate at this rational lambda");
    cmd_poisson->add_option("--out", poisson.out, "Output path (default stdout)");

    FockMomentConfig fock_moment;
    auto* cmd_fock = app.add_subcommand("fock-moment", "Vacuum moment of position operators");
    cmd_fock->add_option("--m", fock_moment.m_text, "Level (1,2,... or inf)");
    cmd_fock->add_option("--profile", fock_moment.profile, "Profile, e.g. 0:1,0:1,1:2,1:2")
        ->required();
    cmd_fock->add_option("--out", fock_moment.out, "Output path (default stdout)");

    StateEvalConfig state_eval;
    auto* cmd_state = app.add_subcommand("state-eval", "Evaluate the product state on a word");
    cmd_state->add_option("registry", state_eval.registry_path, "Algebra registry JSON")
        ->required();
    cmd_state->add_option("--word", state_eval.word, "Word, e.g. 'a1 b2 a1'")->required();
    cmd_state->add_option("--m", state_eval.m_text, "Level (1,2,... or inf)");
    cmd_state->add_option("--out", state_eval.out, "Output path (default stdout)");

    VerifyConfig verify_cfg;
    auto* cmd_verify = app.add_subcommand("verify", "Cross-route verification suites");
    cmd_verify->add_option("--suite", verify_cfg.suite, "all, moments, partitions, states, "
                                                        "spectra, fock or poisson");
    cmd_verify->add_option("--seed", verify_cfg.seed, "Corpus seed");
    cmd_verify->add_option("--max-k", verify_cfg.max_k, "Combinatorial corpus scale");
    cmd_verify->add_option("--len", verify_cfg.word_len, "Word length for state corpora");
    cmd_verify->add_flag("--parallel", verify_cfg.parallel, "Run checks concurrently");
    cmd_verify->add_option("--out", verify_cfg.out, "Report JSON path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_moments->parsed()) return run_moments(moments);
        if (cmd_density->parsed()) return run_density(density);
        if (cmd_atoms->parsed()) return run_atoms(atoms);
        if (cmd_enumerate->parsed()) return run_enumerate(enumerate);
        if (cmd_poisson->parsed()) return run_poisson(poisson);
        if (cmd_fock->parsed()) return run_fock_moment(fock_moment);
        if (cmd_state->parsed()) return run_state_eval(state_eval);
        if (cmd_verify->parsed()) return run_verify(verify_cfg);
    } catch (const std::exception& e) {
        return config_error(e.what());
    }
    return config_error("no subcommand given");
}
