#include "loclab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <numeric>
#include <string>

#include "loclab/errors.hpp"

namespace loclab {

std::uint64_t SymmetricMatrix::fingerprint() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double x : a_) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &x, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

namespace {

struct Reflector {
  std::vector<double> v;  // acts on indices k+1 .. n-1
  double beta = 0.0;
};

// Reduces `a` (clobbered) to tridiagonal T = Q^T A Q. diag[i] = T(i,i),
// off[i] = T(i+1,i) for i < n-1 and off[n-1] = 0. Reflectors are returned
// only when requested.
void tridiagonalize(SymmetricMatrix& a, std::vector<double>& diag, std::vector<double>& off,
                    std::vector<Reflector>* reflectors) {
  const int n = a.order();
  diag.assign(static_cast<std::size_t>(n), 0.0);
  off.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  std::vector<double> q(static_cast<std::size_t>(n));

  for (int k = 0; k + 2 < n; ++k) {
    const int len = n - k - 1;
    double scale = 0.0;
    for (int i = 0; i < len; ++i) scale = std::max(scale, std::abs(a(k + 1 + i, k)));
    diag[static_cast<std::size_t>(k)] = a(k, k);
    if (scale == 0.0) {
      off[static_cast<std::size_t>(k)] = 0.0;
      if (reflectors) reflectors->push_back({});
      continue;
    }
    double norm2 = 0.0;
    for (int i = 0; i < len; ++i) {
      v[static_cast<std::size_t>(i)] = a(k + 1 + i, k) / scale;
      norm2 += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    }
    const double norm = std::sqrt(norm2);
    const double alpha = v[0] > 0 ? -norm : norm;
    v[0] -= alpha;
    const double vtv = norm2 - 2.0 * alpha * (v[0] + alpha) + alpha * alpha;
    off[static_cast<std::size_t>(k)] = alpha * scale;
    if (vtv == 0.0) {
      if (reflectors) reflectors->push_back({});
      continue;
    }
    const double beta = 2.0 / vtv;

    // p = beta * B v, with B the trailing block.
    double vtp = 0.0;
    for (int i = 0; i < len; ++i) {
      const double* row = &a(k + 1 + i, k + 1);
      double s = 0.0;
      for (int j = 0; j < len; ++j) s += row[j] * v[static_cast<std::size_t>(j)];
      q[static_cast<std::size_t>(i)] = beta * s;
      vtp += v[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(i)];
    }
    const double half = 0.5 * beta * vtp;
    for (int i = 0; i < len; ++i) q[static_cast<std::size_t>(i)] -= half * v[static_cast<std::size_t>(i)];

    // B <- B - v q^T - q v^T
    for (int i = 0; i < len; ++i) {
      double* row = &a(k + 1 + i, k + 1);
      const double vi = v[static_cast<std::size_t>(i)];
      const double qi = q[static_cast<std::size_t>(i)];
      for (int j = 0; j < len; ++j) {
        row[j] -= vi * q[static_cast<std::size_t>(j)] + qi * v[static_cast<std::size_t>(j)];
      }
    }
    if (reflectors) {
      reflectors->push_back({std::vector<double>(v.begin(), v.begin() + len), beta});
    }
  }
  if (n >= 2) {
    diag[static_cast<std::size_t>(n - 2)] = a(n - 2, n - 2);
    off[static_cast<std::size_t>(n - 2)] = a(n - 1, n - 2);
  }
  diag[static_cast<std::size_t>(n - 1)] = a(n - 1, n - 1);
  off[static_cast<std::size_t>(n - 1)] = 0.0;
}

[[noreturn]] void fail_to_converge(std::uint64_t fingerprint, int n) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fingerprint));
  throw NumericError("implicit QL did not converge for " + std::to_string(n) + "x" +
                     std::to_string(n) + " matrix (fingerprint " + hex + ")");
}

// Implicit-shift QL on (diag, off). `z` (row-major n x n) accumulates the
// rotations when non-null. Eigenvalues are left unsorted in diag.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& off, double* z, int n,
                    std::uint64_t fingerprint) {
  const double eps = std::numeric_limits<double>::epsilon();
  const int budget = 30 * std::max(n, 1);
  double shift_total = 0.0;
  double tst = 0.0;
  for (int l = 0; l < n; ++l) {
    tst = std::max(tst, std::abs(diag[static_cast<std::size_t>(l)]) + std::abs(off[static_cast<std::size_t>(l)]));
    int m = l;
    while (m < n - 1 && std::abs(off[static_cast<std::size_t>(m)]) > eps * tst) ++m;

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > budget) fail_to_converge(fingerprint, n);
        const auto L = static_cast<std::size_t>(l);
        double g = diag[L];
        double p = (diag[L + 1] - g) / (2.0 * off[L]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        diag[L] = off[L] / (p + r);
        diag[L + 1] = off[L] * (p + r);
        const double dl1 = diag[L + 1];
        double h = g - diag[L];
        for (int i = l + 2; i < n; ++i) diag[static_cast<std::size_t>(i)] -= h;
        shift_total += h;

        p = diag[static_cast<std::size_t>(m)];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = off[L + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          const auto I = static_cast<std::size_t>(i);
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * off[I];
          h = c * p;
          r = std::hypot(p, off[I]);
          off[I + 1] = s * r;
          s = off[I] / r;
          c = p / r;
          p = c * diag[I] - s * g;
          diag[I + 1] = h + s * (c * g + s * diag[I]);
          if (z) {
            for (int k = 0; k < n; ++k) {
              double* row = z + static_cast<std::size_t>(k) * static_cast<std::size_t>(n);
              h = row[i + 1];
              row[i + 1] = s * row[i] + c * h;
              row[i] = c * row[i] - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * off[L] / dl1;
        off[L] = s * p;
        diag[L] = c * p;
      } while (std::abs(off[static_cast<std::size_t>(l)]) > eps * tst);
    }
    diag[static_cast<std::size_t>(l)] += shift_total;
    off[static_cast<std::size_t>(l)] = 0.0;
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(SymmetricMatrix a) {
  const int n = a.order();
  if (n == 0) return {};
  const std::uint64_t fp = a.fingerprint();
  std::vector<double> diag, off;
  tridiagonalize(a, diag, off, nullptr);
  tridiagonal_ql(diag, off, nullptr, n, fp);
  std::sort(diag.begin(), diag.end(), std::greater<>());
  return diag;
}

EigenSystem symmetric_eigensystem(SymmetricMatrix a) {
  const int n = a.order();
  if (n == 0) return {};
  const std::uint64_t fp = a.fingerprint();
  std::vector<double> diag, off;
  std::vector<Reflector> reflectors;
  tridiagonalize(a, diag, off, &reflectors);

  // Q = H_0 H_1 ... H_{n-3}, built right to left into an identity.
  const auto N = static_cast<std::size_t>(n);
  std::vector<double> z(N * N, 0.0);
  for (std::size_t i = 0; i < N; ++i) z[i * N + i] = 1.0;
  for (int k = static_cast<int>(reflectors.size()) - 1; k >= 0; --k) {
    const Reflector& h = reflectors[static_cast<std::size_t>(k)];
    if (h.v.empty()) continue;
    const std::size_t base = static_cast<std::size_t>(k) + 1;
    for (std::size_t col = base; col < N; ++col) {
      double dot = 0.0;
      for (std::size_t i = 0; i < h.v.size(); ++i) dot += h.v[i] * z[(base + i) * N + col];
      dot *= h.beta;
      for (std::size_t i = 0; i < h.v.size(); ++i) z[(base + i) * N + col] -= dot * h.v[i];
    }
  }

  tridiagonal_ql(diag, off, z.data(), n, fp);

  std::vector<std::size_t> order(N);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });
  EigenSystem out;
  out.values.reserve(N);
  out.vectors.reserve(N);
  for (std::size_t k : order) {
    out.values.push_back(diag[k]);
    std::vector<double> vec(N);
    for (std::size_t i = 0; i < N; ++i) vec[i] = z[i * N + k];
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

}  // namespace loclab
