#pragma once

#include <complex>

#include "spectra/rational.hpp"

namespace spectra {

// Point tau in the upper half plane, the single source of every spectral and
// q-series argument.  Derived quantities:
//
//   q     = exp(2 pi i tau),                 |q| < 1
//   alpha = 2 pi Im tau   (dilation length of the loxodromic generator)
//   beta  = 2 pi Re tau   (rotation angle)
//   t     = Re tau / Im tau,  so that q = exp(-alpha (1 - i t))
//   eta   = sign / (2 tau)
//
// The eta shift converts a q-product sign flip into a spectral argument
// shift: -1 = q^{eta(tau)}, so (1 + q^x) = (1 - q^{x + eta}).  Riding along
// the (1 - i t) direction this becomes the purely imaginary Z-argument shift
//   eta(tau) (1 - i t) = -sign * i / (2 Im tau),
// which multiplies exp(-s alpha) by exactly -1.  Both signs differ by one
// full period 2 pi i / alpha of the zeta function, hence give equal values.
class ModularParameter {
 public:
  ModularParameter(double re, double im);

  double re() const { return re_; }
  double im() const { return im_; }

  std::complex<double> tau() const { return {re_, im_}; }
  std::complex<double> q() const;
  double q_abs() const;  // exp(-alpha)

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double t() const { return re_ / im_; }

  std::complex<double> one_minus_it() const { return {1.0, -t()}; }
  std::complex<double> one_plus_it() const { return {1.0, t()}; }

  // sign * (2 tau)^{-1}
  std::complex<double> eta(int sign = +1) const;

  // mult * eta(tau) * (1 - i t) = -sign * mult * i / (2 Im tau); the form in
  // which the eta shift enters Z_Gamma arguments.
  std::complex<double> eta_arg_shift(int sign = +1, double mult = 1.0) const;

  // Branch-fixed fractional power: exp(2 pi i tau e).  Never computed as a
  // complex power of q.
  std::complex<double> q_pow(const Rational& exponent) const;
  std::complex<double> q_pow(double exponent) const;

  // tau -> factor * tau (eta-quotient arguments q^{1/2}, q^2).
  ModularParameter scaled(double factor) const;

 private:
  double re_;
  double im_;
  double alpha_;
  double beta_;
};

}  // namespace spectra
