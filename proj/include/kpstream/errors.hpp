#pragma once

#include <stdexcept>
#include <string>

namespace kpstream {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched keypoint counts, grid shapes, or bit counts.
struct DimensionError : Error {
  using Error::Error;
};

/// A Jacobian or transform that must be invertible is not.
struct SingularityError : Error {
  using Error::Error;
};

/// Input values unfit for quantization (non-finite or outside the clamp range).
struct EncodingError : Error {
  using Error::Error;
};

/// Byte layout violates a length law or packet structure.
struct FramingError : Error {
  using Error::Error;
};

/// Decoded half-precision values fail the finiteness sanity check.
struct PayloadError : Error {
  using Error::Error;
};

/// Entropy bitstream is truncated, oversized, or otherwise corrupt.
struct DecodeError : Error {
  using Error::Error;
};

/// Invalid configuration: empty calibration, tables too short, bad spec values.
struct ConfigError : Error {
  using Error::Error;
};

/// Byte budget below the minimum frame size.
struct BudgetError : Error {
  using Error::Error;
};

/// Packet arrived in a session phase that does not accept it.
struct StateError : Error {
  using Error::Error;
};

/// Session setup rejected (invalid geometry or parameters).
struct SetupError : Error {
  using Error::Error;
};

/// Frequency-table checksums disagree between endpoints.
struct TableMismatchError : Error {
  using Error::Error;
};

/// Bandwidth report requested before any frame was sent.
struct ReportError : Error {
  using Error::Error;
};

/// Filesystem-level failure while reading or writing artifacts.
struct IoError : Error {
  using Error::Error;
};

}  // namespace kpstream
