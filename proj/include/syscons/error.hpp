#pragma once

#include <stdexcept>
#include <string>

namespace syscons {

// Library-wide exception for contract violations: bad inputs, endpoint
// mismatches, failed morphism conditions, enumeration caps.  The message
// carries the witness data when one exists.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& what) { throw Error(what); }

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
}

} // namespace syscons
