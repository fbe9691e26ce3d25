#ifndef CATALAN_ERRORS_HPP_
#define CATALAN_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catalan {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InjectivityError : public Error {
   public:
    using Error::Error;
  };

  class RangeError : public Error {
   public:
    using Error::Error;
  };

  class ChainMismatchError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), _pos(pos) {}

    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

  // Invalid family descriptor or table combination.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // An enumeration or computation cap was exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // A precondition of a constructive factorization was violated.
  class ContractError : public Error {
   public:
    using Error::Error;
  };

  class UnsupportedError : public Error {
   public:
    using Error::Error;
  };

  // Overflow in exact integer arithmetic.
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

}  // namespace catalan

#endif  // CATALAN_ERRORS_HPP_
