#pragma once

#include <stdexcept>
#include <string>

namespace edt {

/// A request the engine declines to run as posed (infeasible strategy,
/// enumeration limit, unsupported target).  The message names what would be
/// feasible instead.  Maps to CLI exit code 4.
class RefusalError : public std::runtime_error {
public:
    explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edt
