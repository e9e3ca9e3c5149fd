#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bintree {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotATree : Error {
    using Error::Error;
};
struct BadIndex : Error {
    using Error::Error;
};
struct BadOrder : Error {
    using Error::Error;
};
struct BadBranchSizes : Error {
    using Error::Error;
};
struct NotAnEdge : Error {
    using Error::Error;
};
struct BadVertex : Error {
    using Error::Error;
};
struct BadConfiguration : Error {
    using Error::Error;
};
struct TooSmall : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace bintree
