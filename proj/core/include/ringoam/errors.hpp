#pragma once

#include <stdexcept>
#include <string>

namespace ringoam {

// Invalid physical parameters, out-of-window modes, malformed run configs.
// The CLI maps this family to exit status 1.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Runtime integration failures (conservation drift, phase singularities).
// The CLI maps this family to exit status 2.
class integration_error : public std::runtime_error {
public:
    explicit integration_error(const std::string& what) : std::runtime_error(what) {}
};

class conservation_error : public integration_error {
public:
    explicit conservation_error(const std::string& what) : integration_error(what) {}
};

class singularity_error : public integration_error {
public:
    explicit singularity_error(const std::string& what) : integration_error(what) {}
};

} // namespace ringoam
