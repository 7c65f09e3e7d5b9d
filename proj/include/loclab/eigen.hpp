#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace loclab {

/// Dense symmetric matrix, row-major, full storage.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  int order() const noexcept { return n_; }
  double& operator()(int i, int j) noexcept { return a_[index(i, j)]; }
  double operator()(int i, int j) const noexcept { return a_[index(i, j)]; }

  /// Sets both (i, j) and (j, i).
  void set(int i, int j, double value) noexcept {
    a_[index(i, j)] = value;
    a_[index(j, i)] = value;
  }

  const std::vector<double>& data() const noexcept { return a_; }
  std::vector<double>& data() noexcept { return a_; }

  /// FNV-1a hash of the entries; identifies a matrix in error messages.
  std::uint64_t fingerprint() const noexcept;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> a_;
};

/// Eigenvalues in descending order. Householder reduction to tridiagonal
/// form followed by implicit-shift QL. Throws NumericError if QL exceeds
/// its iteration budget.
std::vector<double> symmetric_eigenvalues(SymmetricMatrix a);

struct EigenSystem {
  std::vector<double> values;                // descending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k], unit norm
};

/// Same reduction with the orthogonal transformations accumulated.
EigenSystem symmetric_eigensystem(SymmetricMatrix a);

}  // namespace loclab
