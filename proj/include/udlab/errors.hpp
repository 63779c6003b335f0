#pragma once

#include <stdexcept>
#include <string>

namespace udlab {

// Exact-arithmetic predicates either answer correctly or refuse loudly.
// Every refusal below corresponds to a violated precondition, never to a
// numerical fallback.

struct InvalidRadicand : std::domain_error {
    explicit InvalidRadicand(const std::string& what) : std::domain_error(what) {}
};

struct DegeneratePair : std::invalid_argument {
    explicit DegeneratePair(const std::string& what) : std::invalid_argument(what) {}
};

struct CenterOnObject : std::invalid_argument {
    explicit CenterOnObject(const std::string& what) : std::invalid_argument(what) {}
};

struct VerticalCircle : std::invalid_argument {
    explicit VerticalCircle(const std::string& what) : std::invalid_argument(what) {}
};

struct PoleAtExtremal : std::invalid_argument {
    explicit PoleAtExtremal(const std::string& what) : std::invalid_argument(what) {}
};

struct CoincidentInput : std::invalid_argument {
    explicit CoincidentInput(const std::string& what) : std::invalid_argument(what) {}
};

struct MixedBasepoints : std::invalid_argument {
    explicit MixedBasepoints(const std::string& what) : std::invalid_argument(what) {}
};

struct NotOnVariety : std::invalid_argument {
    explicit NotOnVariety(const std::string& what) : std::invalid_argument(what) {}
};

struct TooFewPoints : std::invalid_argument {
    explicit TooFewPoints(const std::string& what) : std::invalid_argument(what) {}
};

struct OutOfRange : std::domain_error {
    explicit OutOfRange(const std::string& what) : std::domain_error(what) {}
};

struct NonRationalLocus : std::domain_error {
    explicit NonRationalLocus(const std::string& what) : std::domain_error(what) {}
};

struct NonPositiveCount : std::domain_error {
    explicit NonPositiveCount(const std::string& what) : std::domain_error(what) {}
};

struct TightSetMismatch : std::logic_error {
    explicit TightSetMismatch(const std::string& what) : std::logic_error(what) {}
};

// Config errors carry a JSON-pointer style location ("/steps/3/cmd").
struct ConfigError : std::runtime_error {
    std::string where;
    ConfigError(const std::string& pointer, const std::string& what)
        : std::runtime_error(pointer + ": " + what), where(pointer) {}
};

}  // namespace udlab
