#include "arithdeg/degree.hpp"

#include <cmath>

namespace arithdeg {

Setting::Setting(FieldData f, QuaternionData q)
    : field(std::move(f)), quaternion(std::move(q)) {
    // Re-derive the quaternion data from its discriminant so a Setting can
    // only hold a pair the inertness hypothesis actually validates.
    QuaternionData checked =
        validate_quaternion(quaternion.disc, field, /*allow_degenerate=*/true);
    if (!(checked == quaternion))
        throw validation_error("Setting: quaternion data does not match its discriminant");
}

std::string DegreeReport::degree_display() const {
    if (degree_coeff == 0 || !p) return "0";
    return std::to_string(degree_coeff) + "·log(" + std::to_string(*p) + ")";
}

double DegreeReport::degree_approx() const {
    if (degree_coeff == 0 || !p) return 0.0;
    return static_cast<double>(degree_coeff) * std::log(static_cast<double>(*p));
}

namespace {

SplittingData nonsplit_splitting(const FieldData& field, long long p,
                                 const char* where) {
    SplittingData sp = splitting_type(field, p);
    if (sp.kind == SplitKind::split)
        throw validation_error(std::string(where) + ": p = " + std::to_string(p) +
                               " splits in the field of discriminant " +
                               std::to_string(field.disc));
    return sp;
}

} // namespace

int epsilon_p(const Setting& s, long long p) {
    if (!is_prime(p))
        throw validation_error("epsilon_p: " + std::to_string(p) + " is not prime");
    return s.quaternion.ramified_at(p) ? 0 : 1;
}

int beta_valuation(const Setting& s, long long ell, long long p) {
    SplittingData sp = nonsplit_splitting(s.field, p, "beta_valuation");
    if (!is_prime(ell))
        throw validation_error("beta_valuation: " + std::to_string(ell) + " is not prime");
    if (ell != p) return s.quaternion.ramified_at(ell) ? 1 : 0;
    return 2 - sp.e * epsilon_p(s, p);
}

FactoredRational argument_m(const Setting& s, long long m, long long p) {
    if (m < 1) throw validation_error("argument_m: m must be a positive integer");
    SplittingData sp = nonsplit_splitting(s.field, p, "argument_m");
    int eps = epsilon_p(s, p);
    int p_exponent = (sp.e - 1) * eps - 1;
    FactoredRational m_factored = factorize(m);
    FactoredRational out = m_factored / factorize(s.quaternion.disc) *
                           FactoredRational::prime_power(p, p_exponent);
    // cross-check against the local multipliers: ord_ell(M) must equal
    // ord_ell(m) - ord_ell(beta_ell) at every prime that could contribute
    std::vector<long long> probe = m_factored.support();
    for (long long q : s.quaternion.ramified_primes) probe.push_back(q);
    probe.push_back(p);
    for (long long ell : probe)
        if (out.ord(ell) != m_factored.ord(ell) - beta_valuation(s, ell, p))
            throw consistency_error("argument_m: valuation ledger mismatch at " +
                                    std::to_string(ell));
    return out;
}

long long orbital_integral(const Setting& s, long long ell, long long m, long long p) {
    SplittingData sp_ell = splitting_type(s.field, ell);
    return sp_ell.e * count_ideals_local(s.field, ell, argument_m(s, m, p));
}

namespace {

long long two_to(int n) { return 1LL << n; }

int ord_m_dk(const FieldData& field, long long m, long long p) {
    return factorize(m).ord(p) + field.disc_factors.ord(p);
}

// f_p * count * length, the point-by-point route to the degree coefficient.
// length arrives as an exact rational; the product must come out integral.
long long degree_via_points(int f, long long count, const Rational& length) {
    __int128 num = static_cast<__int128>(f) * count * length.num;
    if (num % length.den != 0)
        throw consistency_error("degree: f * count * length is not an integer");
    return static_cast<long long>(num / length.den);
}

} // namespace

std::pair<long long, std::optional<long long>> point_count(const Setting& s, long long m) {
    DiffSet diff = diff_b_set(s.field, s.quaternion, m);
    if (!diff.singleton()) return {0, std::nullopt};
    long long p = diff.primes.front();
    long long ideals = count_ideals(s.field, argument_m(s, m, p));
    long long count = two_to(s.quaternion.r() + s.field.s) * ideals;
    // nonvanishing clause: under a singleton Diff the count vanishes exactly
    // when p | d_B and ord_p(m) = 0
    bool empty_fiber = s.quaternion.ramified_at(p) && factorize(m).ord(p) == 0;
    if ((count == 0) != empty_fiber)
        throw consistency_error("point_count: nonvanishing clause violated at m = " +
                                std::to_string(m) + ", p = " + std::to_string(p));
    return {count, p};
}

Rational length_y(const Setting& s, long long m, long long p) {
    if (m < 1) throw validation_error("length_y: m must be a positive integer");
    SplittingData sp = nonsplit_splitting(s.field, p, "length_y");
    int eps = epsilon_p(s, p);
    int k = ord_m_dk(s.field, m, p);
    return Rational(2LL * eps + sp.e * (k - eps), 2);
}

Rational length_z(const FieldData& field, long long m, long long p) {
    if (m < 1) throw validation_error("length_z: m must be a positive integer");
    SplittingData sp = nonsplit_splitting(field, p, "length_z");
    int k = ord_m_dk(field, m, p) - 1; // ord_p(m d_K / p)
    return Rational(sp.f + k, sp.f);
}

DegreeReport degree_y(const Setting& s, long long m) {
    if (m < 1) throw validation_error("degree_y: m must be a positive integer");
    DegreeReport rep;
    rep.stack = StackKind::surface_y;
    rep.m = m;
    rep.field_disc = s.field.disc;
    rep.quaternion_disc = s.quaternion.disc;
    rep.degenerate = s.quaternion.degenerate;
    rep.diff = diff_b_set(s.field, s.quaternion, m);
    rep.supported = rep.diff.singleton();
    if (!rep.supported) return rep;

    long long p = rep.diff.primes.front();
    SplittingData sp = splitting_type(s.field, p);
    if (sp.kind == SplitKind::split)
        throw consistency_error("degree_y: supporting prime " + std::to_string(p) +
                                " is split in K");
    int eps = epsilon_p(s, p);
    rep.p = p;
    rep.splitting = sp;
    rep.epsilon = eps;
    rep.argument = argument_m(s, m, p);
    rep.ideal_count = count_ideals(s.field, *rep.argument);
    rep.count = two_to(s.quaternion.r() + s.field.s) * *rep.ideal_count;
    rep.length = length_y(s, m, p);
    if (rep.count > 0 && !rep.length->is_integer())
        throw consistency_error("degree_y: nonempty fiber with non-integral length at m = " +
                                std::to_string(m));

    long long closed = two_to(s.quaternion.r() + s.field.s) * *rep.ideal_count *
                       (ord_m_dk(s.field, m, p) + eps * sp.f - eps);
    long long via_points = degree_via_points(sp.f, rep.count, *rep.length);
    if (closed != via_points)
        throw consistency_error("degree_y: closed form " + std::to_string(closed) +
                                " != point-count route " + std::to_string(via_points) +
                                " at m = " + std::to_string(m));
    rep.degree_coeff = closed;
    return rep;
}

DegreeReport degree_z(const FieldData& field, long long m) {
    if (m < 1) throw validation_error("degree_z: m must be a positive integer");
    if (!is_prime(-field.disc))
        throw validation_error("degree_z: requires -d_K prime, got d_K = " +
                               std::to_string(field.disc));
    DegreeReport rep;
    rep.stack = StackKind::elliptic_z;
    rep.m = m;
    rep.field_disc = field.disc;
    rep.quaternion_disc = 1;
    rep.degenerate = false;
    rep.diff = diff_set(field, m);
    rep.supported = rep.diff.singleton();
    if (!rep.supported) return rep;

    long long p = rep.diff.primes.front();
    SplittingData sp = splitting_type(field, p);
    if (sp.kind == SplitKind::split)
        throw consistency_error("degree_z: supporting prime " + std::to_string(p) +
                                " is split in K");
    rep.p = p;
    rep.splitting = sp;
    rep.epsilon = 1; // no quaternion ramification on the elliptic stack
    rep.argument = factorize(m) * FactoredRational::prime_power(p, sp.e - 2);
    rep.ideal_count = count_ideals(field, *rep.argument);
    rep.count = 2 * *rep.ideal_count;
    rep.length = length_z(field, m, p);
    if (rep.count > 0 && !rep.length->is_integer())
        throw consistency_error("degree_z: nonempty fiber with non-integral length at m = " +
                                std::to_string(m));

    long long closed = 2 * *rep.ideal_count * (factorize(m).ord(p) + 1);
    long long via_points = degree_via_points(sp.f, rep.count, *rep.length);
    if (closed != via_points)
        throw consistency_error("degree_z: closed form " + std::to_string(closed) +
                                " != point-count route " + std::to_string(via_points) +
                                " at m = " + std::to_string(m));
    rep.degree_coeff = closed;
    return rep;
}

bool z_reduction_check(const FieldData& field, long long m) {
    DegreeReport z = degree_z(field, m);
    Setting degenerate(field, validate_quaternion(1, field, /*allow_degenerate=*/true));
    DegreeReport y = degree_y(degenerate, m);
    return z.diff.primes == y.diff.primes && z.supported == y.supported &&
           z.p == y.p && z.degree_coeff == y.degree_coeff;
}

} // namespace arithdeg
