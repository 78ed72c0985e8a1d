#pragma once

#include <stdexcept>
#include <string>

namespace twcy {

// Malformed or inconsistent input (exit code 2 in the CLI).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal identity that must hold failed, e.g. a differential not squaring to zero.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested verification did not pass (exit code 1 in the CLI).
struct VerificationError : std::runtime_error {
    VerificationError(const std::string& check, const std::string& detail)
        : std::runtime_error(check + ": " + detail), check_name(check) {}
    std::string check_name;
};

}  // namespace twcy
