#pragma once

#include <stdexcept>
#include <string>

namespace nearadd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: bad edge lists, out-of-range vertex ids.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A parameter combination outside the supported range. The message names
/// the violated constraint.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A distributed protocol broke one of its own contracts (bandwidth,
/// missing trace-back state). These indicate bugs, never bad input.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class BandwidthError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

class DeterminismError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

}  // namespace nearadd
