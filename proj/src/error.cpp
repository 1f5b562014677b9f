#include "gridcarbon/error.hpp"

namespace gridcarbon
{

std::string_view to_string(ErrorKind kind)
{
    switch (kind)
    {
        case ErrorKind::EmptyMix: return "EmptyMix";
        case ErrorKind::UnknownSource: return "UnknownSource";
        case ErrorKind::InvalidSource: return "InvalidSource";
        case ErrorKind::InvalidMix: return "InvalidMix";
        case ErrorKind::InvalidContract: return "InvalidContract";
        case ErrorKind::EmptyResidual: return "EmptyResidual";
        case ErrorKind::ClaimExceedsDemand: return "ClaimExceedsDemand";
        case ErrorKind::ZeroDemand: return "ZeroDemand";
        case ErrorKind::ScenarioInvalid: return "ScenarioInvalid";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::GapError: return "GapError";
        case ErrorKind::EmptyFleet: return "EmptyFleet";
        case ErrorKind::EmptyDataset: return "EmptyDataset";
        case ErrorKind::WindowTooShort: return "WindowTooShort";
        case ErrorKind::InvalidLoad: return "InvalidLoad";
        case ErrorKind::SignalMismatch: return "SignalMismatch";
        case ErrorKind::ZeroBaseline: return "ZeroBaseline";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string const& message)
    : std::runtime_error(message), kind_(kind)
{
}

} // namespace gridcarbon
