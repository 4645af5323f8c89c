#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"
#include "spectra/modular.hpp"
#include "spectra/rational.hpp"

namespace spectra {

// Truncated formal power series q^{offset} * sum_k a_k q^{k/c} with exact
// rational coefficients.  Exponents live on the grid (1/c)Z; the offset
// houses fractional prefactors such as q^{-1/48}.  `order` is the exclusive
// truncation exponent of the relative part: coefficients with k/c >= order
// are unknown and never stored.
//
// Values are immutable after construction; all operations return new series.
class FormalSeries {
 public:
  static constexpr std::int64_t kDefaultGrid = 48;

  // The multiplicative identity truncated at `order_units` grid units.
  static FormalSeries one(std::int64_t grid, std::int64_t order_units);

  // coefficient * q^{offset}, truncated at order_units.
  static FormalSeries monomial(std::int64_t grid, const Rational& offset,
                               const Rational& coefficient,
                               std::int64_t order_units);

  FormalSeries(std::int64_t grid, const Rational& offset,
               std::int64_t order_units);

  std::int64_t grid() const { return grid_; }
  std::int64_t order_units() const { return order_units_; }
  Rational order() const { return Rational(order_units_, grid_); }
  Rational offset() const { return Rational(offset_units_, grid_); }
  std::int64_t offset_units() const { return offset_units_; }

  const std::map<std::int64_t, Rational>& terms() const { return coeff_; }

  // Coefficient of the relative exponent k/c (0 if absent or >= order).
  const Rational& coefficient(std::int64_t units) const;
  // Coefficient of the relative rational exponent; grid_error if off-grid.
  const Rational& coefficient(const Rational& exponent) const;

  bool is_one() const;
  bool operator==(const FormalSeries& other) const;

  FormalSeries operator*(const FormalSeries& other) const;
  FormalSeries operator+(const FormalSeries& other) const;
  FormalSeries operator-(const FormalSeries& other) const;
  FormalSeries scaled(const Rational& factor) const;

  // Multiplicative inverse; requires a nonzero coefficient at relative
  // exponent 0 (the leading exponent must be the offset).
  FormalSeries inverse() const;

  // Integer power, negative allowed.
  FormalSeries pow(long exponent) const;

  FormalSeries truncated(std::int64_t order_units) const;

  // Move to a finer grid; new_grid must be a multiple of grid().
  FormalSeries with_grid(std::int64_t new_grid) const;

  // Add `delta` to the offset (exponent must be on grid).
  FormalSeries shifted(const Rational& delta) const;

  // Multiply by the sparse polynomial sum_i c_i q^{u_i/c} (relative units).
  FormalSeries times_sparse(
      const std::map<std::int64_t, Rational>& poly) const;

  // Sum of coeff * exp(2 pi i tau (offset + k/c)); exact truncation means no
  // tail is reported here, the discarded terms are simply not evaluated.
  std::complex<double> value_at(const ModularParameter& tau) const;

  // {grid_denominator, offset, order, terms:[{exponent, coefficient}]} with
  // rationals as decimal-free strings; term exponents are relative to the
  // offset and sorted ascending.
  nlohmann::ordered_json to_json() const;
  static FormalSeries from_json(const nlohmann::ordered_json& j);

  // CSV rows "exponent,coefficient" with absolute exponents.
  std::string to_csv() const;

 private:
  void set(std::int64_t units, const Rational& value);
  void add(std::int64_t units, const Rational& value);

  std::int64_t grid_;
  std::int64_t offset_units_;
  std::int64_t order_units_;
  std::map<std::int64_t, Rational> coeff_;

  friend class SeriesBuilder;
};

// Mutable accumulation helper used by the expansion routines.
class SeriesBuilder {
 public:
  SeriesBuilder(std::int64_t grid, const Rational& offset,
                std::int64_t order_units)
      : series_(grid, offset, order_units) {}

  void add(std::int64_t units, const Rational& value) {
    series_.add(units, value);
  }
  void set(std::int64_t units, const Rational& value) {
    series_.set(units, value);
  }

  FormalSeries take() { return std::move(series_); }

 private:
  FormalSeries series_;
};

// Exponent -> grid units; grid_error unless exponent * grid is an integer.
std::int64_t to_grid_units(const Rational& exponent, std::int64_t grid);

}  // namespace spectra
