#pragma once

#include <string>
#include <vector>

#include "toda/matrix.hpp"
#include "toda/rational.hpp"

namespace toda {

// Eigenvalue data for the iso-spectral flows: strictly increasing rationals
// with zero sum. Kept exact so that Vandermonde/companion identities can be
// tested without roundoff; flows read the float image.
class Spectrum {
 public:
  explicit Spectrum(std::vector<Rat> lambdas);

  // lambda = (-(n-1)/2, ..., (n-1)/2) cleared of half-integers: consecutive
  // integers for odd n, consecutive odd integers for even n.
  static Spectrum standard(int n);

  int n() const { return static_cast<int>(lambdas_.size()); }
  const std::vector<Rat>& exact() const { return lambdas_; }
  const Rat& at(int i) const { return lambdas_.at(i); }  // 0-based

  template <class F>
  std::vector<F> values() const {
    std::vector<F> v(lambdas_.size());
    for (size_t i = 0; i < lambdas_.size(); ++i) v[i] = to_float<F>(lambdas_[i]);
    return v;
  }

  Rat min_gap() const;

  std::string to_string() const;

 private:
  std::vector<Rat> lambdas_;
};

}  // namespace toda
