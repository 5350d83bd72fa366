#pragma once

#include <stdexcept>
#include <string>

namespace dsr {

/// Invalid graph specification or graph document.
class GraphError : public std::runtime_error {
public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: singular pinned Laplacian, eigensolver non-convergence.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dsr
