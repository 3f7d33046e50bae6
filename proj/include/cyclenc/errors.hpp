#pragma once

#include <stdexcept>
#include <string>

namespace cyclenc {

// Invalid argument outside the model's domain (e.g. n < 2).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Base for failures raised while executing a schedule.
class EngineError : public std::runtime_error {
public:
    EngineError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class IncompleteSchedule : public EngineError {
public:
    explicit IncompleteSchedule(const std::string& what) : EngineError("IncompleteSchedule", what) {}
};

class NonDerivablePacket : public EngineError {
public:
    explicit NonDerivablePacket(const std::string& what) : EngineError("NonDerivablePacket", what) {}
};

class EmptyScheduleForObjective : public EngineError {
public:
    explicit EmptyScheduleForObjective(const std::string& what)
        : EngineError("EmptyScheduleForObjective", what) {}
};

// Malformed trace input (distinct from rule violations found in a well-formed trace).
class TraceSchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cyclenc
