#pragma once

#include <stdexcept>
#include <string>

namespace nilcomm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live over different parameter lists or cyclotomic orders.
class RingMismatch : public Error {
public:
    using Error::Error;
};

// A rank-sensitive routine was handed parametric entries.
class RequiresSpecialization : public Error {
public:
    explicit RequiresSpecialization(const std::string& what)
        : Error(what + ": entries depend on parameters; specialize first") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotNilpotent : public Error {
public:
    using Error::Error;
};

class InadmissibleSpecialization : public Error {
public:
    InadmissibleSpecialization(const std::string& constraint, const std::string& what)
        : Error(what), constraint_(constraint) {}
    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

class NoAnnihilator : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column), msg_(msg) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return msg_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string msg_;
};

class DuplicateName : public Error {
public:
    explicit DuplicateName(const std::string& name)
        : Error("duplicate entry name '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class UnverifiedAutomorphism : public Error {
public:
    using Error::Error;
};

}  // namespace nilcomm
