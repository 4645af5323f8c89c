#include "spectra/modular.hpp"

#include <cmath>
#include <numbers>

#include "spectra/errors.hpp"

namespace spectra {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ModularParameter::ModularParameter(double re, double im) : re_(re), im_(im) {
  if (!(im > 0.0)) {
    throw domain_error("modular parameter requires Im tau > 0, got Im tau = " +
                       std::to_string(im));
  }
  alpha_ = kTwoPi * im_;
  beta_ = kTwoPi * re_;
}

std::complex<double> ModularParameter::q() const {
  // exp(2 pi i tau) = e^{-alpha} (cos beta + i sin beta)
  return std::exp(std::complex<double>(-alpha_, beta_));
}

double ModularParameter::q_abs() const { return std::exp(-alpha_); }

std::complex<double> ModularParameter::eta(int sign) const {
  return static_cast<double>(sign) /
         (2.0 * std::complex<double>(re_, im_));
}

std::complex<double> ModularParameter::eta_arg_shift(int sign,
                                                     double mult) const {
  return {0.0, -static_cast<double>(sign) * mult / (2.0 * im_)};
}

std::complex<double> ModularParameter::q_pow(const Rational& exponent) const {
  return q_pow(to_double(exponent));
}

std::complex<double> ModularParameter::q_pow(double exponent) const {
  // exp(2 pi i tau e); entire in e, no branch cut to worry about.
  return std::exp(std::complex<double>(-alpha_ * exponent, beta_ * exponent));
}

ModularParameter ModularParameter::scaled(double factor) const {
  return ModularParameter(re_ * factor, im_ * factor);
}

}  // namespace spectra
