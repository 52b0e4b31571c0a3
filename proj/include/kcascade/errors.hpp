#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace kcascade {

/// Two independent routes to the same quantity disagree. Always an implementation bug.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A checked statement failed on concrete input; detail() carries the offending data.
class CounterexampleError : public std::runtime_error {
public:
    CounterexampleError(const std::string& what, nlohmann::json detail)
        : std::runtime_error(what), detail_(std::move(detail)) {}

    const nlohmann::json& detail() const { return detail_; }

private:
    nlohmann::json detail_;
};

}  // namespace kcascade
