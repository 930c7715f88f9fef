#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace toda {

// Exact scalar used for all combinatorial quantities (Pluecker coordinates,
// matroids, polytopes). Flows use IEEE floats; the two regimes share the
// same dense-matrix interface.
using Rat = boost::multiprecision::mpq_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

template <class F>
inline F to_float(const Rat& r) {
  return r.convert_to<F>();
}

// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double x) { return Rat(x); }

// Accepts "p", "p/q" and plain decimal strings ("-0.25").
Rat parse_rational(const std::string& s);

std::string rat_to_string(const Rat& r);

}  // namespace toda
