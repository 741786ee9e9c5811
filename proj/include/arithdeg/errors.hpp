#pragma once

#include <stdexcept>

namespace arithdeg {

/// Input violates an arithmetic hypothesis: non-fundamental discriminant,
/// invalid quaternion discriminant, a split prime where a nonsplit one is
/// required, and so on. The CLI maps this to exit code 2.
class validation_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input exceeds a declared factorization or search bound. The answer is
/// not wrong, it is unavailable at this size.
class bound_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two evaluation paths that must agree exactly disagreed, or an asserted
/// structural fact failed. Indicates a bug, not bad input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace arithdeg
