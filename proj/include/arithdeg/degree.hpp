#pragma once

#include <optional>
#include <string>
#include <utility>

#include "arithdeg/diff_sets.hpp"
#include "arithdeg/ideal_count.hpp"
#include "arithdeg/rational.hpp"

namespace arithdeg {

/// A coherent (field, quaternion) pair: construction revalidates that every
/// prime dividing the quaternion discriminant is inert in the field, so a
/// Setting can only hold a combination the degree formulas apply to.
struct Setting {
    FieldData field;
    QuaternionData quaternion;

    Setting(FieldData f, QuaternionData q);
};

/// Which moduli problem a report describes: the surface stack (Y, QM abelian
/// surfaces with CM) or the elliptic stack (Z, CM elliptic curves).
enum class StackKind { surface_y, elliptic_z };

/// Full audit trail of one arithmetic-degree evaluation. The degree itself
/// is exact: an integer coefficient times log p, rendered as "c·log(p)".
/// The p-dependent fields are present iff the Diff set is a singleton; when
/// the supporting prime divides d_B and ord_p(m) = 0 the fiber is empty and
/// everything downstream is 0, but p is still recorded.
struct DegreeReport {
    StackKind stack = StackKind::surface_y;
    long long m = 0;
    long long field_disc = 0;      // d_K
    long long quaternion_disc = 1; // d_B (1 for the elliptic stack)
    bool degenerate = false;       // surface stack evaluated with d_B = 1
    DiffSet diff;
    bool supported = false; // |diff| == 1

    std::optional<long long> p;
    std::optional<SplittingData> splitting;
    std::optional<int> epsilon;
    std::optional<FactoredRational> argument; // M, the ideal-count argument
    std::optional<long long> ideal_count;     // R(M)
    long long count = 0;                      // geometric point count
    std::optional<Rational> length;           // deformation-ring length
    long long degree_coeff = 0;

    /// "8·log(19)" or "0".
    std::string degree_display() const;
    /// degree_coeff * log(p) as a double; 0 when the coefficient vanishes.
    double degree_approx() const;
};

/// epsilon_p = 1 - ord_p(d_B): the indicator that B is unramified at p.
int epsilon_p(const Setting& s, long long p);

/// Valuation of the local quadratic-space multiplier beta_ell, for a prime p
/// nonsplit in K: at ell != p it is 1 if ell | d_B and 0 otherwise; at
/// ell = p it is 2 - e_p epsilon_p.
int beta_valuation(const Setting& s, long long ell, long long p);

/// The ideal-count argument M = m * d_B^{-1} * p^{(e_p - 1) epsilon_p - 1},
/// for p nonsplit in K. Construction cross-checks that ord_ell(M) equals
/// ord_ell(m) - beta_valuation(ell) at every prime ell.
FactoredRational argument_m(const Setting& s, long long m, long long p);

/// Local orbital integral e_ell * R_ell(M). Only meaningful when the Diff
/// gate has placed the support at p; the formula itself is total.
long long orbital_integral(const Setting& s, long long ell, long long m,
                           long long p);

/// Geometric point count of the surface stack: 2^{r+s} R(M) when Diff_B(m)
/// is a singleton {p} (returned with p), otherwise (0, nullopt). Asserts the
/// nonvanishing clause: under a singleton Diff the count vanishes exactly
/// when p | d_B and ord_p(m) = 0.
std::pair<long long, std::optional<long long>> point_count(const Setting& s,
                                                           long long m);

/// Deformation length on the surface stack at a prime p nonsplit in K:
/// epsilon_p + e_p (ord_p(m d_K) - epsilon_p)/2, exact. A non-integer value
/// outside the supported locus signals an empty fiber, not an error.
Rational length_y(const Setting& s, long long m, long long p);

/// Deformation length on the elliptic stack: 1 + ord_p(m d_K / p) / f_p,
/// exact, for p nonsplit in K.
Rational length_z(const FieldData& field, long long m, long long p);

/// Arithmetic degree of the surface stack: coefficient
/// 2^{r+s} R(M) (ord_p(m d_K) + epsilon_p f_p - epsilon_p) under a singleton
/// Diff_B(m) = {p}, and 0 otherwise. The report is cross-checked against the
/// independent factorization f_p * point_count * length_y, which must agree
/// exactly.
DegreeReport degree_y(const Setting& s, long long m);

/// Arithmetic degree of the elliptic stack, requiring -d_K prime:
/// coefficient 2 R(m p^{e_p - 2}) (ord_p(m) + 1) under a singleton
/// Diff(m) = {p}, and 0 otherwise.
DegreeReport degree_z(const FieldData& field, long long m);

/// True iff the surface-stack degree in degenerate d_B = 1 mode reproduces
/// the elliptic-stack degree for this m: same Diff set, same supporting
/// prime, same coefficient. Requires -d_K prime.
bool z_reduction_check(const FieldData& field, long long m);

} // namespace arithdeg
