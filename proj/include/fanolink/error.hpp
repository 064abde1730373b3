#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanolink {

enum class ErrorKind {
    DataIntegrity,
    InvalidInput,
    UnresolvedTangent,
    NotTerminal,
    UnsupportedCenter,
    NonHomogeneous,
    LatticeError,
    DegenerateWall,
    ZeroClass,
    VerificationFailure,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DataIntegrity: return "DataIntegrity";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnresolvedTangent: return "UnresolvedTangent";
    case ErrorKind::NotTerminal: return "NotTerminal";
    case ErrorKind::UnsupportedCenter: return "UnsupportedCenter";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::LatticeError: return "LatticeError";
    case ErrorKind::DegenerateWall: return "DegenerateWall";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    }
    return "Unknown";
}

/// All library failures are reported through this type; `kind()` names the
/// failing contract.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace fanolink
