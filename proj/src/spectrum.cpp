#include "toda/spectrum.hpp"

#include <stdexcept>

#include "toda/rational.hpp"

namespace toda {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) return Rat(s);
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(s);
  // decimal: digits before and after the dot over a power of ten
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (digits == "" || digits == "-" || digits == "+") throw std::invalid_argument("bad rational literal: " + s);
  Rat num(digits);
  Rat den(1);
  for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  return num / den;
}

std::string rat_to_string(const Rat& r) { return r.str(); }

Spectrum::Spectrum(std::vector<Rat> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.size() < 2) throw std::invalid_argument("spectrum needs at least two eigenvalues");
  Rat sum = 0;
  for (size_t i = 0; i < lambdas_.size(); ++i) {
    if (i > 0 && lambdas_[i] <= lambdas_[i - 1])
      throw std::invalid_argument("eigenvalues must be strictly increasing");
    sum += lambdas_[i];
  }
  if (sum != 0) throw std::invalid_argument("eigenvalues must sum to zero");
}

Spectrum Spectrum::standard(int n) {
  std::vector<Rat> l(n);
  for (int i = 0; i < n; ++i) l[i] = (n % 2 == 1) ? Rat(i - (n - 1) / 2) : Rat(2 * i - (n - 1));
  return Spectrum(std::move(l));
}

Rat Spectrum::min_gap() const {
  Rat g = lambdas_[1] - lambdas_[0];
  for (size_t i = 2; i < lambdas_.size(); ++i) {
    Rat gap = lambdas_[i] - lambdas_[i - 1];
    if (gap < g) g = gap;
  }
  return g;
}

std::string Spectrum::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < lambdas_.size(); ++i) {
    if (i) s += ",";
    s += lambdas_[i].str();
  }
  return s + ")";
}

}  // namespace toda
