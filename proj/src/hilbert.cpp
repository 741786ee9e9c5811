#include "arithdeg/hilbert.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "arithdeg/quadratic_field.hpp"

namespace arithdeg {

Place Place::finite(long long p) {
    if (!is_prime(p))
        throw validation_error("Place::finite: " + std::to_string(p) + " is not prime");
    return Place(p);
}

long long Place::prime() const {
    if (!is_finite()) throw validation_error("Place: the infinite place has no prime");
    return prime_;
}

std::string Place::str() const {
    return is_finite() ? std::to_string(prime_) : "infinity";
}

namespace {

// Legendre symbol of the prime-to-ell part of a, for odd ell. Multiplicative
// over the factored form; even exponents contribute squares and drop out.
int legendre_of_unit_part(const FactoredRational& a, long long ell) {
    int result = a.sign() < 0 ? kronecker_symbol(-1, ell) : 1;
    for (const auto& [p, e] : a.exponents()) {
        if (p == ell || e % 2 == 0) continue;
        result *= kronecker_symbol(p, ell);
    }
    return result;
}

// The odd part of a reduced mod 8 (odd squares are 1 mod 8, so only the
// parity of each exponent matters).
long long odd_part_mod8(const FactoredRational& a) {
    long long u = a.sign() < 0 ? 7 : 1;
    for (const auto& [p, e] : a.exponents()) {
        if (p == 2 || e % 2 == 0) continue;
        u = (u * (p % 8)) % 8;
    }
    return u;
}

int eps_mod2(long long u) { return u % 4 == 3 ? 1 : 0; }          // (u-1)/2 mod 2
int omega_mod2(long long u) { return (u == 3 || u == 5) ? 1 : 0; } // (u^2-1)/8 mod 2

} // namespace

int hilbert_symbol(const FactoredRational& a, const FactoredRational& b, const Place& v) {
    if (!v.is_finite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    long long ell = v.prime();
    bool alpha_odd = a.ord(ell) % 2 != 0;
    bool beta_odd = b.ord(ell) % 2 != 0;
    if (ell == 2) {
        long long u = odd_part_mod8(a);
        long long w = odd_part_mod8(b);
        int exponent = eps_mod2(u) * eps_mod2(w) + (alpha_odd ? omega_mod2(w) : 0) +
                       (beta_odd ? omega_mod2(u) : 0);
        return exponent % 2 == 0 ? 1 : -1;
    }
    int result = (alpha_odd && beta_odd && ell % 4 == 3) ? -1 : 1;
    if (beta_odd) result *= legendre_of_unit_part(a, ell);
    if (alpha_odd) result *= legendre_of_unit_part(b, ell);
    return result;
}

int hilbert_symbol(long long a, long long b, const Place& v) {
    return hilbert_symbol(factorize(a), factorize(b), v);
}

namespace {

// Depth-first search for a primitive solution of z^2 = a x^2 + b y^2 mod
// ell^k. A primitive triple has a unit coordinate, so after scaling it lies
// in one of the three charts x = 1, y = 1, z = 1; the two free coordinates
// are refined one ell-adic digit at a time. A branch whose point satisfies
// F = 0 mod ell^j with j >= 2 ord(grad F) + 1 lifts to Z_ell by Hensel's
// lemma and ends the search; a branch with no extension dies. Exhausting
// every chart proves there is no primitive solution mod ell^k.
class SolvabilitySearch {
public:
    SolvabilitySearch(long long a, long long b, long long ell, int k)
        : ell_(ell), k_(k) {
        pow_.resize(k + 1);
        pow_[0] = 1;
        for (int i = 1; i <= k; ++i) pow_[i] = pow_[i - 1] * static_cast<unsigned long long>(ell);
        mod_ = pow_[k];
        a_ = reduce(a);
        b_ = reduce(b);
    }

    bool solvable() {
        for (chart_ = 0; chart_ < 3; ++chart_) {
            for (unsigned long long u = 0; u < static_cast<unsigned long long>(ell_); ++u)
                for (unsigned long long v = 0; v < static_cast<unsigned long long>(ell_); ++v)
                    if (value(u, v) % pow_[1] == 0 && search(u, v, 1)) return true;
        }
        return false;
    }

private:
    unsigned long long reduce(long long x) const {
        long long r = x % static_cast<long long>(mod_);
        if (r < 0) r += static_cast<long long>(mod_);
        return static_cast<unsigned long long>(r);
    }

    // F(x, y, z) = z^2 - a x^2 - b y^2 mod ell^k with the chart coordinate
    // set to 1 and (u, v) the free pair.
    unsigned long long value(unsigned long long u, unsigned long long v) const {
        unsigned long long x = chart_ == 0 ? 1 : u;
        unsigned long long y = chart_ == 1 ? 1 : (chart_ == 0 ? u : v);
        unsigned long long z = chart_ == 2 ? 1 : v;
        unsigned __int128 acc = static_cast<unsigned __int128>(z) * z % mod_;
        acc += static_cast<unsigned __int128>(mod_ - a_) * (static_cast<unsigned __int128>(x) * x % mod_) % mod_;
        acc += static_cast<unsigned __int128>(mod_ - b_) * (static_cast<unsigned __int128>(y) * y % mod_) % mod_;
        return static_cast<unsigned long long>(acc % mod_);
    }

    // Valuation of the gradient of F in the two free directions, capped at
    // k. Partials: dF/dx = -2 a x, dF/dy = -2 b y, dF/dz = 2 z.
    int gradient_ord(unsigned long long u, unsigned long long v) const {
        unsigned long long x = chart_ == 0 ? 1 : u;
        unsigned long long y = chart_ == 1 ? 1 : (chart_ == 0 ? u : v);
        unsigned long long z = chart_ == 2 ? 1 : v;
        unsigned long long two = 2 % mod_;
        auto partial_x = static_cast<unsigned long long>(
            static_cast<unsigned __int128>(mod_ - a_) * x % mod_ * two % mod_);
        auto partial_y = static_cast<unsigned long long>(
            static_cast<unsigned __int128>(mod_ - b_) * y % mod_ * two % mod_);
        auto partial_z = static_cast<unsigned long long>(
            static_cast<unsigned __int128>(z) * two % mod_);
        int t = k_;
        if (chart_ != 0) t = std::min(t, ord(partial_x));
        if (chart_ != 1) t = std::min(t, ord(partial_y));
        if (chart_ != 2) t = std::min(t, ord(partial_z));
        return t;
    }

    int ord(unsigned long long r) const {
        if (r == 0) return k_;
        int t = 0;
        while (r % static_cast<unsigned long long>(ell_) == 0) {
            r /= static_cast<unsigned long long>(ell_);
            ++t;
        }
        return t;
    }

    // invariant: value(u, v) = 0 mod ell^j, 1 <= j <= k
    bool search(unsigned long long u, unsigned long long v, int j) {
        if (j >= k_) return true;
        if (--budget_ < 0)
            throw bound_error("hilbert_oracle: search budget exhausted");
        int t = gradient_ord(u, v);
        if (t < j && j >= 2 * t + 1) return true; // Hensel-liftable branch
        unsigned long long step = pow_[j];
        unsigned long long next = pow_[j + 1];
        for (long long d1 = 0; d1 < ell_; ++d1)
            for (long long d2 = 0; d2 < ell_; ++d2) {
                unsigned long long u2 = u + step * static_cast<unsigned long long>(d1);
                unsigned long long v2 = v + step * static_cast<unsigned long long>(d2);
                if (value(u2, v2) % next == 0 && search(u2, v2, j + 1)) return true;
            }
        return false;
    }

    long long ell_;
    int k_;
    int chart_ = 0;
    unsigned long long mod_ = 0;
    unsigned long long a_ = 0, b_ = 0;
    std::vector<unsigned long long> pow_;
    long long budget_ = 20'000'000;
};

int valuation_at(long long n, long long ell) {
    int t = 0;
    while (n % ell == 0) {
        n /= ell;
        ++t;
    }
    return t;
}

} // namespace

int hilbert_oracle(long long a, long long b, long long ell) {
    if (a == 0 || b == 0)
        throw validation_error("hilbert_oracle: arguments must be nonzero");
    if (!is_prime(ell))
        throw validation_error("hilbert_oracle: " + std::to_string(ell) + " is not prime");
    int k = 3 + 2 * (valuation_at(a, ell) + valuation_at(b, ell)) + (ell == 2 ? 3 : 0);
    unsigned __int128 mod = 1;
    for (int i = 0; i < k; ++i) {
        mod *= static_cast<unsigned __int128>(ell);
        if (mod > (static_cast<unsigned __int128>(1) << 62))
            throw bound_error("hilbert_oracle: ell^k does not fit the search (ell = " +
                              std::to_string(ell) + ", k = " + std::to_string(k) + ")");
    }
    return SolvabilitySearch(a, b, ell, k).solvable() ? 1 : -1;
}

} // namespace arithdeg
