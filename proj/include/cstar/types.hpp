// Shared scalar types, tolerance policy, error hierarchy and the
// deterministic random stream used throughout the library.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cstar {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

/// Scale-free tolerance: every rank/zero decision compares against
/// epsilon * max(1, sigma_max) of the matrix under test.
struct Tolerance {
  double epsilon = 1e-9;

  double cut(double sigma_max) const {
    return epsilon * std::max(1.0, sigma_max);
  }
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed user input (descriptors, tables, CLI arguments). Exit code 3.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A theorem checker was invoked outside its hypotheses. Exit code 4.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what) : Error(what) {}
};

/// splitmix64 stream; used instead of <random> distributions so that
/// identical seeds give identical output on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// uniform in [0, 1)
  double uniform() {
    return double(next_u64() >> 11) * 0x1.0p-53;
  }

  /// inclusive bounds
  int uniform_int(int lo, int hi) {
    return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
  }

  double gaussian() {
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  Cplx cgaussian() {
    double re = gaussian();
    double im = gaussian();
    return Cplx(re, im) / std::sqrt(2.0);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
  return a;
}

}  // namespace cstar
