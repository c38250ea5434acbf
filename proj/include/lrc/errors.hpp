#ifndef LRC_ERRORS_HPP
#define LRC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// --- field construction / arithmetic ---
class NotPrime : public Error {
   public:
    using Error::Error;
};
class NotPrimitive : public Error {
   public:
    using Error::Error;
};
class DegreeMismatch : public Error {
   public:
    using Error::Error;
};
class FieldMismatch : public Error {
   public:
    using Error::Error;
};
class DivisionByZero : public Error {
   public:
    using Error::Error;
};

// --- linear codes ---
class ZeroMatrix : public Error {
   public:
    using Error::Error;
};
class DegenerateCode : public Error {
   public:
    using Error::Error;
};
class LengthMismatch : public Error {
   public:
    using Error::Error;
};
class IndexOutOfRange : public Error {
   public:
    using Error::Error;
};
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

// --- recovery ---
class DistanceOne : public Error {
   public:
    using Error::Error;
};
class Unrecoverable : public Error {
   public:
    using Error::Error;
};
class RecoverySetErased : public Error {
   public:
    using Error::Error;
};
class NotACodeword : public Error {
   public:
    using Error::Error;
};

// Multi-erasure repair reached a fixpoint with positions still missing.
class Stalled : public Error {
   public:
    Stalled(std::string msg, std::vector<int> residual)
        : Error(std::move(msg)), residual_(std::move(residual)) {}
    // 1-based positions that could not be repaired.
    const std::vector<int>& residual() const noexcept { return residual_; }

   private:
    std::vector<int> residual_;
};

// --- file parsing ---
class ParseError : public Error {
   public:
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const noexcept { return line_; }

   private:
    int line_ = 0;
};
class FieldError : public ParseError {
   public:
    using ParseError::ParseError;
};
class RankError : public ParseError {
   public:
    using ParseError::ParseError;
};

}  // namespace lrc

#endif
