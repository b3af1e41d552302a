#pragma once

#include <stdexcept>
#include <string>

namespace lvm {

/// Malformed input or a violated precondition. The caller is at fault.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// A search budget or enumeration cap was hit before an answer was known.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lvm
