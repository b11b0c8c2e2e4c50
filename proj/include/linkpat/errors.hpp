#pragma once
//! Exception hierarchy for the linkpat library. Every error the public API can
//! raise derives from Error, so callers may catch the base or a specific type.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkpat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arc list violations in involution construction.
struct DuplicateEndpoint : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct SelfArc : Error { using Error::Error; };

// Exhaustive enumeration asked to exceed the configured cap.
struct ResourceCap : Error { using Error::Error; };

// Two objects living over different n were combined.
struct SizeMismatch : Error { using Error::Error; };

// Scan for a unique poset minimum found zero or several; signals a bug,
// not bad input.
struct NotUnique : Error { using Error::Error; };

// sigma_bar_next needs at least two fixed points to insert an arc.
struct NoFixedPoints : Error { using Error::Error; };

// tableau_of_sigma applied to a non-maximal orbit (crossings or covered
// fixed points present).
struct NotMaximal : Error { using Error::Error; };

// u_move applied at a descent position.
struct DescentAtI : Error { using Error::Error; };

// Two-tableau operation applied to tableaux of different shapes.
struct ShapeMismatch : Error { using Error::Error; };

// Text input (inline arc syntax or JSON) rejected; position is a byte
// offset into the offending string where known, npos otherwise.
struct ParseError : Error {
    explicit ParseError(const std::string& what, std::size_t pos = std::string::npos)
        : Error(what), position(pos) {}
    std::size_t position;
};

// Poset cache file unreadable or stale; callers rebuild instead of failing.
struct CacheCorrupt : Error { using Error::Error; };

} // namespace linkpat
