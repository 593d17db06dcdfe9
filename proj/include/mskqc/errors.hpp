#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mskqc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownStructure : Error {
    using Error::Error;
};

/// Malformed volume/CSV/JSON input. Carries the byte offset at which
/// parsing failed when that is known (SIZE_MAX otherwise).
struct FormatError : Error {
    explicit FormatError(const std::string& msg, std::size_t offset = SIZE_MAX)
        : Error(offset == SIZE_MAX ? msg : msg + " (byte offset " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

struct GeometryError : Error {
    using Error::Error;
};

struct StackError : Error {
    using Error::Error;
};

struct EmptyMask : Error {
    using Error::Error;
};

struct EmptyStructure : Error {
    using Error::Error;
};

struct CalibrationError : Error {
    using Error::Error;
};

struct DegenerateLabels : Error {
    using Error::Error;
};

struct SingularFit : Error {
    using Error::Error;
};

struct NoNegativeTrend : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

struct UnsupportedN : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct SpecError : Error {
    using Error::Error;
};

struct CaseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace mskqc
