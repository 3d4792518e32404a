#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Base class for everything thrown by the library. what() is a single line.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected arguments, malformed configs, violated preconditions. CLI exit code 2.
class config_error : public error {
public:
    using error::error;
};

// Numeric failures: quadrature non-convergence, window too small, step-size
// induced norm drift. CLI exit code 3.
class numeric_error : public error {
public:
    using error::error;
};

class invalid_coin : public config_error {
public:
    using config_error::config_error;
};

class precondition_error : public config_error {
public:
    using config_error::config_error;
};

class degenerate_coin : public config_error {
public:
    using config_error::config_error;
};

// Evaluation exactly at a band edge of a singular density.
class singular_endpoint : public config_error {
public:
    using config_error::config_error;
};

class window_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

} // namespace qwalk
