#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topocalc {

/// Input violates a precondition of an operation (bad slope, non-geometric
/// graph, malformed diagram...). The CLI maps these to exit status 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input document does not match the expected JSON schema. Carries a JSON
/// pointer to the offending node; the CLI maps these to exit status 3.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string pointer, const std::string& what)
        : std::runtime_error(pointer + ": " + what), pointer_(std::move(pointer)) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// Euler number requested on a block whose base surface is non-orientable.
class OrientationConventionError : public ValidationError {
public:
    OrientationConventionError()
        : ValidationError("euler number is only defined for orientable base surfaces") {}
};

/// Linking matrix is not unimodular, so the boundary is not S^3.
class NonUnimodularError : public ValidationError {
public:
    explicit NonUnimodularError(std::int64_t abs_det)
        : ValidationError("form is not unimodular (|det| = " + std::to_string(abs_det) + ")"),
          abs_det_(abs_det) {}

    std::int64_t abs_det() const noexcept { return abs_det_; }

private:
    std::int64_t abs_det_;
};

}  // namespace topocalc
