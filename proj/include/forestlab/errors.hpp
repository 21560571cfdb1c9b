#pragma once

#include <stdexcept>
#include <string>

namespace forestlab {

// Base for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// forest-core
struct InvalidEventError : Error {
    using Error::Error;
};
struct CrossTreeError : Error {
    using Error::Error;
};

// bitlabel
struct OverflowError : Error {
    using Error::Error;
};
struct OutOfRangeError : Error {
    using Error::Error;
};
struct TooLongError : Error {
    using Error::Error;
};

// schemes
struct WidthMismatchError : Error {
    using Error::Error;
};
struct UnsupportedQueryError : Error {
    using Error::Error;
};
struct SizeFunctionViolationError : Error {
    using Error::Error;
};
struct DegreeExceededError : Error {
    using Error::Error;
};
struct ComponentMergeError : Error {
    using Error::Error;
};

// bounds harness
struct InvalidParamsError : Error {
    using Error::Error;
};
struct BoundViolationError : Error {
    using Error::Error;
};

// text formats
struct ParseError : Error {
    using Error::Error;
};

}  // namespace forestlab
