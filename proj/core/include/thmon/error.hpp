#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thmon {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised when an exhaustive enumeration would exceed the configured cap.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)),
          msg_(msg),
          pos_(pos) {}

    // Message without the position suffix.
    std::string const& message() const noexcept {
      return msg_;
    }

    std::size_t position() const noexcept {
      return pos_;
    }

   private:
    std::string msg_;
    std::size_t pos_;
  };

}  // namespace thmon
