#pragma once

#include <stdexcept>
#include <string>

namespace cobkit {

// A precondition of an operation was violated by the caller.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input is well formed but outside what the operation handles (e.g. a
// two-component link where a knot is required).
class unsupported_input : public domain_error {
public:
    using domain_error::domain_error;
};

// A continued fraction fold hit a zero denominator.
class evaluation_error : public domain_error {
public:
    using domain_error::domain_error;
};

// A requested size exceeds a configured resource cap.
class resource_error : public domain_error {
public:
    using domain_error::domain_error;
};

// An internal invariant failed. Always a defect in this library.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw domain_error(what);
}

}  // namespace detail

}  // namespace cobkit
