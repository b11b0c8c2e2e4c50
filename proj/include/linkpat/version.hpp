#pragma once

namespace linkpat {

// Bumped on any change that affects computed artifacts; poset cache files
// embed it and are rebuilt on mismatch.
inline constexpr const char* library_version = "0.1.0";

} // namespace linkpat
