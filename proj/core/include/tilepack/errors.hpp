#pragma once

#include <stdexcept>

namespace tilepack {

// Base for all library errors so callers can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyTileError : Error { using Error::Error; };
struct DisconnectedTileError : Error { using Error::Error; };
struct BarTileError : Error { using Error::Error; };
struct MalformedInstanceError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct UnrecognizedBlockError : Error { using Error::Error; };
struct IndexOutOfRangeError : Error { using Error::Error; };
struct InternalInconsistencyError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace tilepack
