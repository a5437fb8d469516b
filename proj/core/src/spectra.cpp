#include "monohier/spectra.hpp"

#include "monohier/partitions.hpp"
#include "monohier/quadrature.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace monohier::spectra {

JacobiSequence jacobi_for(Level m) {
    if (m.is_infinite()) return {{}, Rational(1)};
    std::vector<Rational> head(m.value(), Rational(1));
    return {std::move(head), Rational(1, 2)};
}

Rational central_moment(Level m, int n) {
    if (n < 0) throw std::invalid_argument("moment order must be non-negative");
    if (n % 2 == 1) return 0;
    int k = n / 2;
    return Rational(partitions::count_pair_partitions(k, m)) / Rational(factorial(k));
}

Rational moments_from_jacobi(const JacobiSequence& seq, int n, int depth) {
    if (n < 0) throw std::invalid_argument("moment order must be non-negative");
    const int needed = n / 2 + 1;
    if (depth < 0) depth = needed;
    if (depth < needed) throw std::invalid_argument("insufficient truncation depth");
    std::vector<Rational> v(depth, 0), w(depth, 0);
    v[0] = 1;
    for (int step = 0; step < n; ++step) {
        for (int j = 0; j < depth; ++j) {
            Rational acc = 0;
            if (j > 0) acc += v[j - 1];
            if (j + 1 < depth) acc += seq.beta(j + 1) * v[j + 1];
            w[j] = acc;
        }
        std::swap(v, w);
    }
    return v[0];
}

namespace {

using Complex = std::complex<double>;

// sqrt(z^2-2) on the branch asymptotic to z, holomorphic off the cut
Complex branch_sqrt(Complex z) {
    return z * std::sqrt(Complex(1.0) - 2.0 / (z * z));
}

const double kSqrt2 = std::sqrt(2.0);

Complex cauchy_level1(Complex z) { return 1.0 / branch_sqrt(z); }

} // namespace

std::complex<double> cauchy_transform(int m, std::complex<double> z) {
    if (m < 1) throw std::invalid_argument("hierarchy level must be >= 1");
    if (z.imag() == 0 && std::abs(z.real()) <= kSqrt2)
        throw std::domain_error("point on the branch cut; use cauchy_boundary");
    Complex g = cauchy_level1(z);
    for (int j = 2; j <= m; ++j) g = 1.0 / (z - g);
    return g;
}

std::complex<double> cauchy_boundary(int m, double x) {
    if (m < 1) throw std::invalid_argument("hierarchy level must be >= 1");
    double inside = 2.0 - x * x;
    if (inside <= 0) throw std::domain_error("boundary value requested off the cut");
    // sqrt(x^2-2) -> i*sqrt(2-x^2) in the upper limit
    Complex g = 1.0 / Complex(0.0, std::sqrt(inside));
    for (int j = 2; j <= m; ++j) g = 1.0 / (Complex(x) - g);
    return g;
}

std::complex<double> cauchy_continued_fraction(const JacobiSequence& seq,
                                               std::complex<double> z, int depth) {
    if (depth < 1) throw std::invalid_argument("continued fraction depth must be >= 1");
    Complex tail(0.0);
    for (int n = depth; n >= 1; --n) tail = to_double(seq.beta(n)) / (z - tail);
    return 1.0 / (z - tail);
}

double density(int m, double x) {
    if (2.0 - x * x <= 0) return 0.0;
    return -cauchy_boundary(m, x).imag() / M_PI;
}

namespace {

// value and derivative of the level-m transform at real x outside the cut
std::pair<double, double> real_transform(int m, double x) {
    double s = std::sqrt(x * x - 2.0);
    double g = (x > 0 ? 1.0 : -1.0) / s;  // branch asymptotic to 1/x
    double dg = -x / (s * s * s) * (x > 0 ? 1.0 : -1.0);
    for (int j = 2; j <= m; ++j) {
        double den = x - g;
        double next = 1.0 / den;
        double dnext = -(1.0 - dg) / (den * den);
        g = next;
        dg = dnext;
    }
    return {g, dg};
}

std::vector<double> positive_poles(int m);

// resolvent denominator of level m at x > sqrt2 (real branch)
double denominator(int m, double x) { return x - real_transform(m - 1, x).first; }

std::vector<double> positive_poles(int m) {
    if (m <= 1) return {};
    std::vector<double> exclusions = positive_poles(m - 1);
    const double kStep = 1.0 / 64.0;
    const double kGuard = 1e-9;
    std::vector<double> roots;

    auto bisect = [&](double lo, double hi) {
        double flo = denominator(m, lo);
        for (int iter = 0; iter < 200; ++iter) {
            double mid = 0.5 * (lo + hi);
            if (hi - lo < 1e-12) return mid;
            double fmid = denominator(m, mid);
            if ((flo < 0) == (fmid < 0)) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
            }
        }
        std::ostringstream os;
        os << "atom root search failed to converge on [" << lo << ", " << hi << "]";
        throw std::runtime_error(os.str());
    };

    double prev_x = kSqrt2 + kGuard;
    double prev_f = denominator(m, prev_x);
    for (int k = 1; prev_x < 4.0; ++k) {
        double x = std::min(kSqrt2 + k * kStep, 4.0);
        // split cells containing a pole of the previous level
        std::vector<double> cuts{prev_x};
        for (double p : exclusions)
            if (p > prev_x + kGuard && p < x - kGuard) {
                cuts.push_back(p - kGuard);
                cuts.push_back(p + kGuard);
            }
        cuts.push_back(x);
        for (std::size_t c = 0; c + 1 < cuts.size(); c += 2) {
            double a = cuts[c], b = cuts[c + 1];
            double fa = (c == 0) ? prev_f : denominator(m, a);
            double fb = denominator(m, b);
            if ((fa < 0) != (fb < 0)) roots.push_back(bisect(a, b));
            if (c + 2 >= cuts.size()) prev_f = fb;
        }
        prev_x = x;
    }
    return roots;
}

} // namespace

std::vector<Atom> atoms(int m) {
    if (m < 1) throw std::invalid_argument("hierarchy level must be >= 1");
    if (m == 1) return {};
    std::vector<Atom> out;
    for (double x : positive_poles(m)) {
        auto [g, dg] = real_transform(m - 1, x);
        (void)g;
        double mass = 1.0 / (1.0 - dg);
        out.push_back(Atom{x, mass});
    }
    std::vector<Atom> mirrored;
    for (auto it = out.rbegin(); it != out.rend(); ++it)
        mirrored.push_back(Atom{-it->location, it->mass});
    mirrored.insert(mirrored.end(), out.begin(), out.end());
    return mirrored;
}

MeasureSummary measure_summary(int m) {
    MeasureSummary s;
    s.density = [m](double x) { return density(m, x); };
    s.support_lo = -kSqrt2;
    s.support_hi = kSqrt2;
    s.atoms = atoms(m);
    return s;
}

double measure_moment(int m, int n) {
    // x = sqrt2*sin(theta) absorbs the square-root endpoint behaviour
    auto integrand = [m, n](double theta) {
        double x = kSqrt2 * std::sin(theta);
        return std::pow(x, n) * density(m, x) * kSqrt2 * std::cos(theta);
    };
    double ac = integrate_adaptive(integrand, -M_PI / 2, M_PI / 2, 1e-12, 1e-11);
    for (const auto& atom : atoms(m)) ac += std::pow(atom.location, n) * atom.mass;
    return ac;
}

double measure_total_mass(int m) { return measure_moment(m, 0); }

Polynomial poisson_moment(Level m, int n) {
    if (n < 0) throw std::invalid_argument("moment order must be non-negative");
    if (n == 0) return Polynomial::constant(1);
    Polynomial result;
    for (int q = 1; q <= n; ++q) {
        Rational coeff = Rational(partitions::count_partitions_by_blocks(n, q, m)) /
                         Rational(factorial(q));
        result += Polynomial::monomial(coeff, q);
    }
    return result;
}

namespace {

// truncated formal series in w = 1/z with polynomial-in-lambda coefficients
struct Series {
    std::vector<Polynomial> c;  // c[j] multiplies w^j

    static Series zero(int order) { return Series{std::vector<Polynomial>(order + 1)}; }
    int order() const { return static_cast<int>(c.size()) - 1; }

    Series multiply(const Series& o) const {
        Series r = zero(order());
        for (int i = 0; i <= order(); ++i) {
            if (c[i].is_zero()) continue;
            for (int j = 0; i + j <= order(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        return r;
    }

    // reciprocal; requires constant coefficient 1
    Series reciprocal() const {
        if (!(c[0] == Polynomial::constant(1)))
            throw std::logic_error("series reciprocal needs unit constant term");
        Series r = zero(order());
        r.c[0] = Polynomial::constant(1);
        for (int j = 1; j <= order(); ++j) {
            Polynomial acc;
            for (int i = 1; i <= j; ++i) acc += c[i] * r.c[j - i];
            r.c[j] = -acc;
        }
        return r;
    }
};

} // namespace

PoissonSeries poisson_series(int m, int order) {
    if (m < 1) throw std::invalid_argument("hierarchy level must be >= 1");
    if (order < 0) throw std::invalid_argument("series order must be non-negative");

    // H as a series in w: coefficient of w^{n+1} is the n-th moment polynomial
    const int w_order = order + 1;
    Series h = Series::zero(w_order);
    for (int n = 0; n <= order; ++n) h.c[n + 1] = poisson_moment(Level::finite(1), n);

    for (int level = 2; level <= m; ++level) {
        Series a = Series::zero(w_order);
        a.c[0] = Polynomial::constant(1);
        for (int j = 0; j <= w_order; ++j) a.c[j] -= h.c[j];
        Series denom = a;
        denom.c[1] -= Polynomial::monomial(1, 1);  // subtract lambda*w
        Series quotient = a.multiply(denom.reciprocal());
        Series next = Series::zero(w_order);
        for (int j = 0; j < w_order; ++j) next.c[j + 1] = quotient.c[j];
        h = std::move(next);
    }

    PoissonSeries out;
    for (int n = 0; n <= order; ++n) out.coefficients.push_back(h.c[n + 1]);
    return out;
}

void write_moment_csv(std::ostream& out, const std::vector<Level>& levels,
                      const std::vector<int>& orders) {
    out << "m,n,moment_num,moment_den\n";
    for (const auto& m : levels)
        for (int n : orders) {
            Rational v = central_moment(m, n);
            out << m.str() << "," << n << "," << v.get_num().get_str() << ","
                << v.get_den().get_str() << "\n";
        }
}

void write_density_csv(std::ostream& out, int m, int points, double margin) {
    out << "m,x,f\n";
    double lo = -kSqrt2 - margin, hi = kSqrt2 + margin;
    for (int i = 0; i < points; ++i) {
        double x = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
        out << m << "," << format_double17(x) << "," << format_double17(density(m, x)) << "\n";
    }
}

void write_atoms_csv(std::ostream& out, int m) {
    out << "m,location,mass\n";
    for (const auto& atom : atoms(m))
        out << m << "," << format_double17(atom.location) << "," << format_double17(atom.mass)
            << "\n";
}

} // namespace monohier::spectra
