#ifndef QSUPER_ERRORS_HPP
#define QSUPER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsuper {

/// Base for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: the caller asked for something outside the domain of an
// operation (a non-dominant weight, mismatched ranks, ...).
class domain_error : public error {
public:
    using error::error;
};

class rank_mismatch : public domain_error {
public:
    using domain_error::domain_error;
};

class non_dominant : public domain_error {
public:
    using domain_error::domain_error;
};

class non_distinct : public domain_error {
public:
    using domain_error::domain_error;
};

class not_symmetric : public domain_error {
public:
    using domain_error::domain_error;
};

// Internal invariant violations. None of these can happen for correct
// input unless the implementation is wrong.
class invariant_violation : public error {
public:
    using error::error;
};

class non_exact_division : public invariant_violation {
public:
    using invariant_violation::invariant_violation;
};

class negative_coefficient : public invariant_violation {
public:
    using invariant_violation::invariant_violation;
};

class odd_length_gap : public invariant_violation {
public:
    using invariant_violation::invariant_violation;
};

/// Raised when a weight contradicts the vanishing of the trivial
/// gl(n)-multiplicity / supercharacter. Must never be caught silently.
class theorem_violation : public error {
public:
    using error::error;
};

} // namespace qsuper

#endif
