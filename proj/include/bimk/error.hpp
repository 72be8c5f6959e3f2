#pragma once

#include <stdexcept>
#include <string>

namespace bimk {

// domain errors: well-formed requests whose answer is a refusal (bad segment,
// horizon exceeded, budget exhausted). usage errors: malformed requests.
// The CLI maps domain -> exit 1, usage -> exit 2.
struct Error : std::runtime_error {
    enum class Kind { domain, usage };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail_domain(const std::string& msg) {
    throw Error(Error::Kind::domain, msg);
}
[[noreturn]] inline void fail_usage(const std::string& msg) {
    throw Error(Error::Kind::usage, msg);
}

}  // namespace bimk
