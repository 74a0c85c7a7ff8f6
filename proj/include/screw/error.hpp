#pragma once

#include <stdexcept>
#include <string>

namespace screw {

// Base class for domain failures. name() is the stable identifier reported by
// the CLI (e.g. "ZeroScrew", "SingularInertia").
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

struct InvalidFrame : Error {
    explicit InvalidFrame(const std::string& what) : Error("InvalidFrame", what) {}
};

struct InvalidRotation : Error {
    explicit InvalidRotation(const std::string& what) : Error("InvalidRotation", what) {}
};

struct ZeroScrew : Error {
    explicit ZeroScrew(const std::string& what) : Error("ZeroScrew", what) {}
};

struct MissingVelocities : Error {
    explicit MissingVelocities(const std::string& what) : Error("MissingVelocities", what) {}
};

struct EmptyDistribution : Error {
    explicit EmptyDistribution(const std::string& what) : Error("EmptyDistribution", what) {}
};

struct SingularInertia : Error {
    explicit SingularInertia(const std::string& what) : Error("SingularInertia", what) {}
};

}  // namespace screw
