#ifndef QSEMI_ERRORS_HPP_
#define QSEMI_ERRORS_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace qsemi {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Bad argument, malformed input or violated precondition.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! The Cayley-derived u disagrees with its displayed cycle form.
  class ConsistencyError : public Error {
   public:
    using Error::Error;
  };

  //! Closure of the generators outgrew the expected group order.
  class ClosureError : public Error {
   public:
    using Error::Error;
  };

  //! A rewrite was requested at a position that holds no relation factor.
  class BadFactor : public Error {
   public:
    using Error::Error;
  };

  //! Congruence class enumeration hit RewriteConfig::max_class_size.
  class ClassTooLarge : public Error {
   public:
    using Error::Error;
  };

}  // namespace qsemi

#endif  // QSEMI_ERRORS_HPP_
