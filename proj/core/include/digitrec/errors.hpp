#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace digitrec {

/// Base of every error the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violated precondition without a more specific category.
struct InvalidArgument : Error { using Error::Error; };

// audio / wav
struct IoFailure : Error { using Error::Error; };
struct MalformedWav : Error { using Error::Error; };
struct UnsupportedEncoding : Error { using Error::Error; };
struct EmptySignal : Error { using Error::Error; };
struct RateMismatch : Error { using Error::Error; };

// augmentation
struct SilentClean : Error { using Error::Error; };
struct SilentNoise : Error { using Error::Error; };

// features
struct TooShort : Error { using Error::Error; };
struct WrongCoeffCount : Error { using Error::Error; };

// neuralnet / model
struct ShapeMismatch : Error { using Error::Error; };
struct LabelOutOfRange : Error { using Error::Error; };
struct CorruptCheckpoint : Error { using Error::Error; };
struct UnknownVersion : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };

// data / manifests
struct NoFilesFound : Error { using Error::Error; };
struct UnlabeledFile : Error { using Error::Error; };
struct TooFewSamples : Error { using Error::Error; };

/// JSONL manifest parse failure; carries the 1-based offending line.
struct ParseError : Error {
  ParseError(std::size_t line_no, const std::string& message)
      : Error("manifest line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
  std::size_t line;
};

}  // namespace digitrec
