#include "stacked/error.hpp"

namespace stacked {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::DuplicateFacet: return "DuplicateFacet";
    case ErrorKind::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorKind::ZeroDimensional: return "ZeroDimensional";
    case ErrorKind::InvalidWalk: return "InvalidWalk";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::PathTooShort: return "PathTooShort";
    case ErrorKind::NotSeparated: return "NotSeparated";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotCodimOneFace: return "NotCodimOneFace";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownToken: return "UnknownToken";
    case ErrorKind::Overlap: return "Overlap";
    case ErrorKind::MissingElement: return "MissingElement";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail, std::optional<int> line)
{
    std::string out;
    if (line)
        out += "line " + std::to_string(*line) + ": ";
    out += std::string(to_string(kind));
    if (!detail.empty())
        out += ": " + detail;
    return out;
}

} // namespace

Error::Error(ErrorKind kind, const std::string& detail)
    : Error(kind, detail, std::nullopt, std::nullopt)
{
}

Error::Error(ErrorKind kind, const std::string& detail, std::optional<std::size_t> item,
             std::optional<int> line)
    : std::runtime_error(compose(kind, detail, line))
    , kind_(kind)
    , item_(item)
    , line_(line)
    , detail_(detail)
{
}

Error Error::at_item(ErrorKind kind, const std::string& detail, std::size_t item)
{
    return Error(kind, detail, item, std::nullopt);
}

Error Error::at_line(ErrorKind kind, const std::string& detail, int line)
{
    return Error(kind, detail, std::nullopt, line);
}

} // namespace stacked
