#pragma once

#include <stdexcept>
#include <string>

namespace gperm {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Refused because the enumeration would exceed a configured work limit.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two computation routes that must agree did not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require_domain(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

inline void require_consistent(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError(what);
}

}  // namespace gperm
