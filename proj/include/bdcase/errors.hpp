#ifndef BDCASE_ERRORS_HPP
#define BDCASE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdcase {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed concrete syntax. Carries the byte offset of the failure and the
// token kinds that would have been accepted there.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg)
        : Error(msg), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable: " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class DeltaPresent : public Error {
public:
    DeltaPresent() : Error("formula contains a Delta node where the classical language is required") {}
};

class CapacityExceeded : public Error {
public:
    CapacityExceeded(std::size_t vars, std::size_t cap)
        : Error("variable count " + std::to_string(vars) + " exceeds cap " + std::to_string(cap)) {}
};

class UnknownPoint : public Error {
public:
    explicit UnknownPoint(const std::string& name) : Error("unknown point: " + name) {}
};

class UnknownWitness : public Error {
public:
    explicit UnknownWitness(const std::string& name) : Error("unknown witness case: " + name) {}
};

// A case that does not entail any status probe for some signature variable.
class NotDeterminate : public Error {
public:
    NotDeterminate(const std::string& case_name, const std::string& variable)
        : Error("case " + case_name + " does not determine variable " + variable),
          case_name_(case_name), variable_(variable) {}
    const std::string& case_name() const { return case_name_; }
    const std::string& variable() const { return variable_; }

private:
    std::string case_name_;
    std::string variable_;
};

} // namespace bdcase

#endif
