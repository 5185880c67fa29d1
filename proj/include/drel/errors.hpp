#pragma once

#include <stdexcept>
#include <string>

namespace drel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable files.
class IoError : public Error {
 public:
  using Error::Error;
};

// Structurally broken input (e.g. most records of a corpus fail to parse).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Contract violations on inputs: bad configs, bad lexicons, empty datasets.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Optimization failure (non-finite loss).
class TrainingError : public Error {
 public:
  using Error::Error;
};

// Model applied against a feature space it was not trained on.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace drel
