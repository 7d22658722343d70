#pragma once

#include <stdexcept>

namespace gammaecho {

struct TruncationTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidCutoff : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidDensityMatrix : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidGrid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPSD : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GridTooCoarse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateSweep : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace gammaecho
