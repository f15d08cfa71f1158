#pragma once

#include <stdexcept>
#include <string>

namespace erdos {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotBistochastic : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInnerPermutation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAdmissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotRCDS : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// uv propagation found a contradictory edge; callers are expected to have
// checked the RCDS property first, so seeing this signals a caller bug.
struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyReport : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CorruptCheckpoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace erdos
