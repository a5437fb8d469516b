#ifndef MONOHIER_SPECTRA_HPP
#define MONOHIER_SPECTRA_HPP

#include "monohier/arith.hpp"
#include "monohier/level.hpp"
#include "monohier/polynomial.hpp"

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

namespace monohier::spectra {

/// Continued-fraction coefficients of a Cauchy transform: a finite prefix
/// followed by an eventually constant tail.
struct JacobiSequence {
    std::vector<Rational> head;
    Rational tail;

    /// beta_n, 1-based.
    Rational beta(int n) const {
        if (n < 1) throw std::invalid_argument("Jacobi coefficients are 1-based");
        return n <= static_cast<int>(head.size()) ? head[n - 1] : tail;
    }
};

/// Coefficient sequence of the central limit law at the given level:
/// m ones followed by the constant 1/2; all ones at infinity.
JacobiSequence jacobi_for(Level m);

/// n-th moment of the standard central limit law of the hierarchy: zero for
/// odd n, the colored pair-partition count divided by k! for n = 2k.
Rational central_moment(Level m, int n);

/// n-th moment of the symmetric measure with the given Jacobi coefficients,
/// read off the vacuum entry of the n-th power of the truncated tridiagonal
/// operator. The truncation depth must be at least n/2 + 1 (the default).
Rational moments_from_jacobi(const JacobiSequence& seq, int n, int depth = -1);

/// Cauchy transform of the level-m central limit law, via the resolvent
/// recursion on top of the arcsine transform 1/sqrt(z^2-2) with the branch
/// asymptotic to 1/z (cut on [-sqrt2, sqrt2]). Real z inside the cut are
/// rejected; use cauchy_boundary for the upper-limit value there.
std::complex<double> cauchy_transform(int m, std::complex<double> z);

/// Boundary value G(x + i0+) on the cut, computed analytically by
/// substituting the upper limit of the square root.
std::complex<double> cauchy_boundary(int m, double x);

/// Generic continued-fraction evaluation of a Jacobi expansion, truncated at
/// the given depth.
std::complex<double> cauchy_continued_fraction(const JacobiSequence& seq,
                                               std::complex<double> z, int depth);

/// Absolutely continuous density of the level-m central limit law;
/// zero off [-sqrt2, sqrt2].
double density(int m, double x);

struct Atom {
    double location;
    double mass;
};

/// Atoms of the level-m central limit law: bracketed scan of (sqrt2, 4] for
/// sign changes of the resolvent denominator (step 1/64, bisection to
/// 1e-12), masses from the derivative of the denominator; mirrored to the
/// negative axis. Level 1 has none.
std::vector<Atom> atoms(int m);

struct MeasureSummary {
    std::function<double(double)> density;
    double support_lo;
    double support_hi;
    std::vector<Atom> atoms;
};
MeasureSummary measure_summary(int m);

/// Numeric integral of x^n against the full measure (density plus atoms),
/// with the square-root endpoint substitution x = sqrt2*sin(theta).
double measure_moment(int m, int n);
double measure_total_mass(int m);

/// Moments of the Poisson limit law as exact polynomials in lambda:
/// sum over block counts q of lambda^q/q! times the colored partition count.
Polynomial poisson_moment(Level m, int n);

/// Moment generating series in powers of 1/z with polynomial-in-lambda
/// coefficients: coefficient(n) multiplies z^{-n-1}.
struct PoissonSeries {
    std::vector<Polynomial> coefficients;
    const Polynomial& moment(int n) const { return coefficients.at(n); }
    int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Series computed through the resolvent-style recurrence on generating
/// functions; the level-1 base case comes from enumeration counts.
PoissonSeries poisson_series(int m, int order);

/// CSV emitters (17 significant digits for floats, '.' decimal separator).
void write_moment_csv(std::ostream& out, const std::vector<Level>& levels,
                      const std::vector<int>& orders);
void write_density_csv(std::ostream& out, int m, int points, double margin);
void write_atoms_csv(std::ostream& out, int m);

} // namespace monohier::spectra

#endif
