#ifndef MK1_ERRORS_HPP_
#define MK1_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mk1 {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class AlphabetMismatch : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  class DomainError : public Error {
   public:
    using Error::Error;
  };

  class RuleNotApplicable : public Error {
   public:
    using Error::Error;
  };

  class OrderViolation : public Error {
   public:
    using Error::Error;
  };

  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace mk1

#endif  // MK1_ERRORS_HPP_
