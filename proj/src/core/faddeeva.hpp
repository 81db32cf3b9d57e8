#pragma once

#include <complex>
#include <optional>

// w(z) = exp(-z^2) erfc(-iz), the plane-wave transient propagator kernel.
// Target relative accuracy 1e-10 against a high-precision erfc reference.

namespace stepswitch::faddeeva {

using complexd = std::complex<double>;

enum class Regime { series, continued_fraction, asymptotic };

// Faddeeva function for arbitrary complex z.  The lower half plane is reached
// through w(-z) = 2 exp(-z^2) - w(z); when that exponential overflows the
// result is infinite (see would_overflow / w_checked).
complexd w(complexd z, Regime* regime = nullptr);

// True when evaluating w(z) requires 2*exp(-z^2) with Re(-z^2) beyond the
// double range (|log| > 700).
bool would_overflow(complexd z);

// w(z) or nullopt on overflow of the reflection term.
std::optional<complexd> w_checked(complexd z);

// Large-z limiting form: i/(sqrt(pi) z), plus 2 exp(-z^2) for Im z < 0.
complexd w_asymptotic(complexd z);

// dw/dz = -2 z w(z) + 2i/sqrt(pi).
complexd w_derivative(complexd z);

}  // namespace stepswitch::faddeeva
