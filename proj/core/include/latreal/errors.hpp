#pragma once

#include <stdexcept>
#include <string>

namespace latreal {

// Exit-code classes used by the CLI: domain errors (1), usage errors (2),
// internal inconsistencies (3).  NoSolution is a result, not an error.
class Error : public std::runtime_error {
public:
    enum class Kind { Domain = 1, Usage = 2, Internal = 3 };
    Error(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(std::string msg) : Error(Kind::Domain, std::move(msg)) {}
};

class UsageError : public Error {
public:
    explicit UsageError(std::string msg) : Error(Kind::Usage, std::move(msg)) {}
};

class InternalError : public Error {
public:
    explicit InternalError(std::string msg) : Error(Kind::Internal, std::move(msg)) {}
};

struct UndeclaredParameter : DomainError { using DomainError::DomainError; };
struct UnboundParameter : DomainError { using DomainError::DomainError; };
struct NotFiniteType : DomainError { using DomainError::DomainError; };
struct ParseError : UsageError { using UsageError::UsageError; };
struct BudgetExceeded : DomainError { using DomainError::DomainError; };
struct SingularGram : DomainError { using DomainError::DomainError; };
struct NotSymmetrizable : DomainError { using DomainError::DomainError; };
struct MalformedDatum : DomainError { using DomainError::DomainError; };
struct DivisionByZero : DomainError { using DomainError::DomainError; };
struct DegreeCapExceeded : DomainError { using DomainError::DomainError; };
struct ConstraintViolated : DomainError { using DomainError::DomainError; };
struct ValidityViolated : DomainError { using DomainError::DomainError; };
struct SchemaError : UsageError { using UsageError::UsageError; };
struct IoError : UsageError { using UsageError::UsageError; };
struct CartanMismatch : InternalError { using InternalError::InternalError; };
struct Inconsistent : InternalError { using InternalError::InternalError; };

} // namespace latreal
