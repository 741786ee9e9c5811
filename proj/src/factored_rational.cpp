#include "arithdeg/factored_rational.hpp"

#include <cstdlib>

namespace arithdeg {

long long factor_bound() {
    static const long long bound = [] {
        if (const char* env = std::getenv("ARITHDEG_FACTOR_BOUND")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end != env && *end == '\0' && v > kDefaultFactorBound) return v;
        }
        return kDefaultFactorBound;
    }();
    return bound;
}

FactoredRational FactoredRational::from_integer(long long n) {
    if (n == 0) throw validation_error("factorize: 0 has no factorization");
    FactoredRational out;
    if (n < 0) out.sign_ = -1;
    unsigned long long rest =
        n < 0 ? -static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
    if (rest > static_cast<unsigned long long>(factor_bound()))
        throw bound_error("factorize: |" + std::to_string(n) +
                          "| exceeds the factorization bound " +
                          std::to_string(factor_bound()));
    for (unsigned long long d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) continue;
        int e = 0;
        do {
            rest /= d;
            ++e;
        } while (rest % d == 0);
        out.exponents_.emplace(static_cast<long long>(d), e);
    }
    if (rest > 1) out.exponents_.emplace(static_cast<long long>(rest), 1);
    return out;
}

FactoredRational FactoredRational::prime_power(long long p, int e) {
    if (p < 2 || !factorize(p).exponents().count(p))
        throw validation_error("prime_power: " + std::to_string(p) + " is not prime");
    FactoredRational out;
    if (e != 0) out.exponents_.emplace(p, e);
    return out;
}

int FactoredRational::ord(long long p) const {
    auto it = exponents_.find(p);
    return it == exponents_.end() ? 0 : it->second;
}

bool FactoredRational::is_integer() const {
    for (const auto& [p, e] : exponents_)
        if (e < 0) return false;
    return true;
}

std::vector<long long> FactoredRational::support() const {
    std::vector<long long> out;
    out.reserve(exponents_.size());
    for (const auto& [p, e] : exponents_) out.push_back(p);
    return out;
}

namespace {

long long checked_prime_power_product(const std::map<long long, int>& exps, bool positive) {
    unsigned __int128 acc = 1;
    constexpr unsigned __int128 kMax = static_cast<unsigned __int128>(__INT64_MAX__);
    for (const auto& [p, e] : exps) {
        if (positive ? e < 0 : e > 0) continue;
        int reps = e < 0 ? -e : e;
        for (int i = 0; i < reps; ++i) {
            acc *= static_cast<unsigned __int128>(p);
            if (acc > kMax)
                throw bound_error("FactoredRational: numerator/denominator overflows int64");
        }
    }
    return static_cast<long long>(acc);
}

} // namespace

long long FactoredRational::numerator() const {
    return sign_ * checked_prime_power_product(exponents_, true);
}

long long FactoredRational::denominator() const {
    return checked_prime_power_product(exponents_, false);
}

FactoredRational FactoredRational::operator*(const FactoredRational& rhs) const {
    FactoredRational out;
    out.sign_ = sign_ * rhs.sign_;
    out.exponents_ = exponents_;
    for (const auto& [p, e] : rhs.exponents_) {
        auto [it, inserted] = out.exponents_.try_emplace(p, e);
        if (!inserted) {
            it->second += e;
            if (it->second == 0) out.exponents_.erase(it);
        }
    }
    return out;
}

FactoredRational FactoredRational::inverse() const {
    FactoredRational out;
    out.sign_ = sign_;
    for (const auto& [p, e] : exponents_) out.exponents_.emplace(p, -e);
    return out;
}

FactoredRational FactoredRational::operator/(const FactoredRational& rhs) const {
    return *this * rhs.inverse();
}

std::string FactoredRational::str() const {
    long long num = numerator();
    long long den = denominator();
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

FactoredRational factorize(long long n) {
    return FactoredRational::from_integer(n);
}

} // namespace arithdeg
