#pragma once

#include <stdexcept>
#include <string>

namespace bubble {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DegenerateConfig : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RegionViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InfeasibleBand : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InfeasibleTarget : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StepFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CurvatureUnderflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DepthExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Uncovered : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bubble
