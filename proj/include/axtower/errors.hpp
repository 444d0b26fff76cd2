#pragma once

#include <stdexcept>
#include <string>

namespace axtower {

/// Base of every domain error raised by the library. `name()` is the stable
/// identifier printed by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define AXTOWER_DEFINE_ERROR(Type)                                            \
    class Type : public Error {                                               \
    public:                                                                   \
        explicit Type(const std::string& what) : Error(#Type, what) {}        \
    }

AXTOWER_DEFINE_ERROR(InvalidArgument);
AXTOWER_DEFINE_ERROR(DivisionByZero);
AXTOWER_DEFINE_ERROR(FieldMismatch);
AXTOWER_DEFINE_ERROR(ConfigMismatch);
AXTOWER_DEFINE_ERROR(PrecisionExhausted);
AXTOWER_DEFINE_ERROR(UnsupportedConfig);
AXTOWER_DEFINE_ERROR(WindowTooShort);
AXTOWER_DEFINE_ERROR(LeadingCoefficientZero);
AXTOWER_DEFINE_ERROR(NoDependenceFound);
AXTOWER_DEFINE_ERROR(SupportViolation);
AXTOWER_DEFINE_ERROR(DegenerateInput);
AXTOWER_DEFINE_ERROR(ParseError);

#undef AXTOWER_DEFINE_ERROR

}  // namespace axtower
