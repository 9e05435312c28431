#pragma once

#include <stdexcept>
#include <string>

namespace sc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
public:
  explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

class ChannelMismatch : public Error {
public:
  explicit ChannelMismatch(const std::string& what) : Error(what) {}
};

class IsolatedVertex : public Error {
public:
  explicit IsolatedVertex(int vertex)
      : Error("vertex " + std::to_string(vertex) + " has degree 0"),
        vertex_(vertex) {}
  int vertex() const { return vertex_; }

private:
  int vertex_;
};

class NonpositiveVertexWeight : public Error {
public:
  explicit NonpositiveVertexWeight(int vertex)
      : Error("vertex " + std::to_string(vertex) + " has nonpositive weight") {}
};

class NoConvergence : public Error {
public:
  explicit NoConvergence(const std::string& what) : Error(what) {}
};

class ZeroVector : public Error {
public:
  ZeroVector() : Error("vector has zero norm") {}
};

class DegenerateSubset : public Error {
public:
  explicit DegenerateSubset(const std::string& what) : Error(what) {}
};

class TargetTooSmall : public Error {
public:
  explicit TargetTooSmall(const std::string& what) : Error(what) {}
};

class KTooLarge : public Error {
public:
  explicit KTooLarge(const std::string& what) : Error(what) {}
};

class ResampleExhausted : public Error {
public:
  explicit ResampleExhausted(const std::string& what) : Error(what) {}
};

class NonpositiveBaseline : public Error {
public:
  NonpositiveBaseline() : Error("baseline loss must be positive") {}
};

class NonOrthonormalU : public Error {
public:
  explicit NonOrthonormalU(double defect)
      : Error("U is not orthonormal, |UtU - I| = " + std::to_string(defect)) {}
};

class SchemeMismatch : public Error {
public:
  explicit SchemeMismatch(const std::string& what) : Error(what) {}
};

class OutOfDomain : public Error {
public:
  explicit OutOfDomain(const std::string& what) : Error(what) {}
};

class TooSmall : public Error {
public:
  explicit TooSmall(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class GenerationFailed : public Error {
public:
  explicit GenerationFailed(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace sc
