#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kirchhoff {

/// Operand shapes do not conform (non-square determinant, mismatched product).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Elimination found no usable pivot in column `pivot()`.
class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(std::size_t pivot)
      : std::runtime_error("singular matrix: no pivot in column " + std::to_string(pivot)),
        pivot_(pivot) {}

  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

class UnknownVertexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UnknownEdgeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvalidPartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem hypothesis does not hold for the given arguments; the message
/// names the hypothesis (e.g. "edge is a bridge; cutting law requires non-bridge").
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kirchhoff
