#pragma once

#include <stdexcept>
#include <string>

namespace infoutil {

// Malformed user-supplied data: bad distributions, files, parameter ranges.
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input whose analysis cannot proceed (e.g. a reducible chain
// with no unique stationary distribution). The CLI maps this to exit code 3.
class AnalysisError : public std::runtime_error {
public:
    explicit AnalysisError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace infoutil
