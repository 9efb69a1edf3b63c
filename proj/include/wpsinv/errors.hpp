#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wpsinv {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition or input-format violation (bad basket entry, wrong arity, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The inputs are well-formed but mutually inconsistent, e.g. a Riemann-Roch
/// value that should be a plurigenus is not a nonnegative integer.
class InconsistentData : public Error {
public:
    using Error::Error;
};

/// chi(mK) failed the integrality/nonnegativity screen at a specific m.
class IntegralityError : public InconsistentData {
public:
    IntegralityError(std::int64_t m, const std::string& value)
        : InconsistentData("chi(" + std::to_string(m) + "K) = " + value +
                           " is not a nonnegative integer (m=" + std::to_string(m) + ")"),
          m_(m),
          value_(value) {}

    std::int64_t m() const { return m_; }
    const std::string& value() const { return value_; }

private:
    std::int64_t m_;
    std::string value_;
};

}  // namespace wpsinv
