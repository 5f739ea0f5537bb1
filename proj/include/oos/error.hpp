#pragma once

#include <stdexcept>
#include <string>

namespace oos {

/// Error type thrown by every module: parsing, ring mismatches, incomplete
/// bindings, budget refusals. The message always says what and where.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

} // namespace oos
