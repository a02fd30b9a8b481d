#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chargealg {

struct SourceSpan {
    std::size_t line = 0;
    std::size_t column = 0;

    bool valid() const { return line != 0; }
};

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The input was understood but describes something the engine refuses:
/// malformed text, a non-symmetry, a singular system, an open algebra.
class RejectionError : public Error {
  public:
    using Error::Error;
};

/// Two routes that must agree did not. Always a bug or an unsupported corner.
class InconsistencyError : public Error {
  public:
    using Error::Error;
};

class UnknownSymbolError : public RejectionError {
  public:
    explicit UnknownSymbolError(std::string name)
        : RejectionError("unknown symbol '" + name + "'"), name_(std::move(name)) {}
    const std::string &name() const { return name_; }

  private:
    std::string name_;
};

class DuplicateSymbolError : public RejectionError {
  public:
    explicit DuplicateSymbolError(std::string name)
        : RejectionError("duplicate symbol '" + name + "'"), name_(std::move(name)) {}
    const std::string &name() const { return name_; }

  private:
    std::string name_;
};

class UnboundSymbolError : public Error {
  public:
    explicit UnboundSymbolError(std::string name)
        : Error("symbol '" + name + "' has no numeric value"), name_(std::move(name)) {}
    const std::string &name() const { return name_; }

  private:
    std::string name_;
};

class DivisionByZeroError : public Error {
  public:
    using Error::Error;
};

/// Raised when an operation would leave the Laurent-polynomial class,
/// e.g. dividing by a sum.
class NonPolynomialError : public RejectionError {
  public:
    using RejectionError::RejectionError;
};

class ParseError : public RejectionError {
  public:
    ParseError(SourceSpan span, const std::string &message)
        : RejectionError(format(span, message)), span_(span), message_(message) {}

    SourceSpan span() const { return span_; }
    const std::string &message() const { return message_; }

  private:
    static std::string format(SourceSpan span, const std::string &message) {
        return std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message;
    }

    SourceSpan span_;
    std::string message_;
};

class RegularityError : public RejectionError {
  public:
    using RejectionError::RejectionError;
};

class UnsupportedClassError : public RejectionError {
  public:
    using RejectionError::RejectionError;
};

/// A declared generator does not leave the action invariant up to a total
/// derivative. Carries the rendered residual.
class NotASymmetryError : public RejectionError {
  public:
    NotASymmetryError(std::string generator, std::string residual, const std::string &why)
        : RejectionError("generator '" + generator + "' is not a symmetry: " + why + "; residual = " +
                         residual),
          generator_(std::move(generator)), residual_(std::move(residual)) {}

    const std::string &generator() const { return generator_; }
    const std::string &residual() const { return residual_; }

  private:
    std::string generator_;
    std::string residual_;
};

class NotClosedError : public RejectionError {
  public:
    NotClosedError(std::string first, std::string second, std::vector<std::string> residual,
                   const std::string &why)
        : RejectionError("generators '" + first + "' and '" + second + "' do not close: " + why),
          first_(std::move(first)), second_(std::move(second)), residual_(std::move(residual)) {}

    const std::string &first() const { return first_; }
    const std::string &second() const { return second_; }
    const std::vector<std::string> &residual() const { return residual_; }

  private:
    std::string first_;
    std::string second_;
    std::vector<std::string> residual_;
};

class LinearDependenceError : public RejectionError {
  public:
    using RejectionError::RejectionError;
};

class IntegrationFailure : public Error {
  public:
    IntegrationFailure(const std::string &what, std::vector<double> last_good)
        : Error(what), last_good_(std::move(last_good)) {}
    const std::vector<double> &last_good_state() const { return last_good_; }

  private:
    std::vector<double> last_good_;
};

} // namespace chargealg
