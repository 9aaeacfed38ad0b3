#pragma once

#include <stdexcept>

namespace treekummer {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tree construction and enumeration.
class SelfLoop : public Error {
 public:
  using Error::Error;
};
class DuplicateEdge : public Error {
 public:
  using Error::Error;
};
class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};
class CycleDetected : public Error {
 public:
  using Error::Error;
};
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};
class SizeOneTree : public Error {
 public:
  using Error::Error;
};
class TooLarge : public Error {
 public:
  using Error::Error;
};

// Numerics.
class NonPositiveInput : public Error {
 public:
  using Error::Error;
};
class NonPositiveScale : public Error {
 public:
  using Error::Error;
};
class QuadratureNotConverged : public Error {
 public:
  using Error::Error;
};

// Statistical tests.
class NonMonotoneCdf : public Error {
 public:
  using Error::Error;
};
class TooFewSamples : public Error {
 public:
  using Error::Error;
};
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed spec files / CLI input.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace treekummer
