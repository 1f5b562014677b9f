#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridcarbon
{

enum class ErrorKind
{
    EmptyMix,
    UnknownSource,
    InvalidSource,
    InvalidMix,
    InvalidContract,
    EmptyResidual,
    ClaimExceedsDemand,
    ZeroDemand,
    ScenarioInvalid,
    ParseError,
    SchemaError,
    GapError,
    EmptyFleet,
    EmptyDataset,
    WindowTooShort,
    InvalidLoad,
    SignalMismatch,
    ZeroBaseline,
    Io,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this type; kind() drives CLI exit codes.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, std::string const& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace gridcarbon
