#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecp {

/* Base for all domain errors thrown by the library.  The CLI maps these to
   exit code 2; command-line misuse is reported as UsageError (exit code 1). */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define ECP_DEFINE_ERROR(NAME)                                                 \
    struct NAME : Error {                                                      \
        explicit NAME(const std::string& msg) : Error(msg) {}                  \
    }

ECP_DEFINE_ERROR(DimensionUnsupported);
ECP_DEFINE_ERROR(DimensionMismatch);
ECP_DEFINE_ERROR(DegenerateInput);
ECP_DEFINE_ERROR(TooFewPoints);
ECP_DEFINE_ERROR(TooManyPoints);
ECP_DEFINE_ERROR(NoConvergence);
ECP_DEFINE_ERROR(SeriesTooShort);
ECP_DEFINE_ERROR(DegenerateSeries);
ECP_DEFINE_ERROR(OutOfRange);
ECP_DEFINE_ERROR(EmptySearchWindow);
ECP_DEFINE_ERROR(SizeMismatch);
ECP_DEFINE_ERROR(SchemaError);
ECP_DEFINE_ERROR(UsageError);

#undef ECP_DEFINE_ERROR

struct ParseError : Error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace ecp
