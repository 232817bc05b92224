#pragma once

#include <stdexcept>
#include <string>

namespace hankelbound {

struct UnboundVariable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisorNotUnit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderTooLow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArityMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamOutOfDisk : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedClass : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScaleZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hankelbound
