#include "arithdeg/diff_sets.hpp"

#include <set>
#include <sstream>

namespace arithdeg {

std::string DiffSet::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < primes.size(); ++i) os << (i ? ", " : "") << primes[i];
    os << "}";
    return os.str();
}

namespace {

DiffSet diff_common(const FieldData& field, const QuaternionData* q, long long m) {
    if (m < 1) throw validation_error("diff set: m must be a positive integer");
    FactoredRational neg_m = factorize(-m);
    std::set<long long> candidates{2};
    for (long long p : field.disc_factors.support()) candidates.insert(p);
    for (long long p : neg_m.support()) candidates.insert(p);
    if (q)
        for (long long p : q->ramified_primes) candidates.insert(p);

    DiffSet out{{}, q ? DiffVariant::quaternionic : DiffVariant::plain};
    for (long long ell : candidates) {
        Place v = Place::finite(ell);
        int symbol = hilbert_symbol(field.disc_factors, neg_m, v);
        if (q) symbol *= local_invariant(*q, v);
        if (symbol == -1) out.primes.push_back(ell);
    }
    return out;
}

} // namespace

DiffSet diff_set(const FieldData& field, long long m) {
    return diff_common(field, nullptr, m);
}

DiffSet diff_b_set(const FieldData& field, const QuaternionData& q, long long m) {
    return diff_common(field, &q, m);
}

} // namespace arithdeg
