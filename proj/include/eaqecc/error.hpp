#pragma once

#include <stdexcept>
#include <string>

namespace eaqecc {

enum class Errc {
    invalid_argument,
    out_of_range,
    unavailable,      // requested computation not offered for this setting or scale
    budget_exceeded,
    formula_mismatch, // cross-check mode found formula != coset oracle
};

/// Every failure raised by the library. The C API maps `code()` onto its
/// status enum.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace eaqecc
