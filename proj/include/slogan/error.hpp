#pragma once

#include <stdexcept>
#include <string>

namespace slogan {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input data or arguments. The CLI maps this to exit status 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// File-system or stream failure. The CLI maps this to exit status 2.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Transient backend failure (timeout, refused connection, 5xx).
class RetryableError : public Error {
 public:
  using Error::Error;
};

/// Backend answered, but not with a well-formed response.
class ProtocolError : public Error {
 public:
  ProtocolError(const std::string& what, std::string payload)
      : Error(what), payload_(std::move(payload)) {}

  const std::string& payload() const noexcept { return payload_; }

 private:
  std::string payload_;
};

}  // namespace slogan
