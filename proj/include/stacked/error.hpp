#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stacked {

enum class ErrorKind {
    EmptyInput,
    NotPure,
    DuplicateFacet,
    DuplicateVertexInFacet,
    ZeroDimensional,
    InvalidWalk,
    NotConnected,
    PathTooShort,
    NotSeparated,
    NotAFace,
    NotCodimOneFace,
    NotIndependent,
    NotAPartition,
    OutOfRange,
    SyntaxError,
    UnknownToken,
    Overlap,
    MissingElement,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library.
//
// `item` is the 0-based index of the offending entry of a list input (the
// facet list of build_complex, the block list of a partition). `line` is the
// 1-based line number, set when the error came out of one of the text readers.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    static Error at_item(ErrorKind kind, const std::string& detail, std::size_t item);
    static Error at_line(ErrorKind kind, const std::string& detail, int line);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> item() const noexcept { return item_; }
    std::optional<int> line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Error(ErrorKind kind, const std::string& detail, std::optional<std::size_t> item,
          std::optional<int> line);

    ErrorKind kind_;
    std::optional<std::size_t> item_;
    std::optional<int> line_;
    std::string detail_;
};

} // namespace stacked
