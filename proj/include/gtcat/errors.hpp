#pragma once

#include <stdexcept>
#include <string>

namespace gtcat {

/// Invalid or unsatisfiable user input (bad parameters, malformed data,
/// requests outside the configured bounds). CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proved identity failed to hold at runtime. This never indicates bad
/// input; it indicates a transcription bug and is always worth a report.
/// CLI exit code 2.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw ConsistencyError(msg);
}

} // namespace gtcat
