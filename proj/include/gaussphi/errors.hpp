#pragma once

#include <stdexcept>
#include <string>

namespace gaussphi {

// Input outside an operation's mathematical domain (phi(0), a zero modulus, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Exact arithmetic would leave the representable range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// A size guard on an enumeration or oracle level refused the request.
class CapExceeded : public std::length_error {
public:
    CapExceeded(const std::string& what, int requested, int cap)
        : std::length_error(what + ": requested " + std::to_string(requested) +
                            " exceeds cap " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    int requested() const noexcept { return requested_; }
    int cap() const noexcept { return cap_; }

private:
    int requested_;
    int cap_;
};

}  // namespace gaussphi
