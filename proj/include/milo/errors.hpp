#ifndef MILO_ERRORS_HPP
#define MILO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace milo {

// Mismatched ambient dimensions (nvars) between operands, or an index
// outside [0, nvars).
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

// Operation applied to an ideal outside its domain (zero ideal where a
// nonzero one is required, unit where proper is required, mixed degrees
// where equigenerated is required, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A configured resource cap was exceeded (exponent overflow, too many
// variables for a subset enumeration, search budget exhausted).  The CLI
// maps this to its own exit code so scripted callers can tell "refused to
// try" from "tried and failed".
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual or structured input.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace milo

#endif
