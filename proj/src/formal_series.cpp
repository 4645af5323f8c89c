#include "spectra/formal_series.hpp"

#include <sstream>
#include <utility>

#include "spectra/errors.hpp"

namespace spectra {

namespace {
const Rational kZero = 0;
}

std::int64_t to_grid_units(const Rational& exponent, std::int64_t grid) {
  const Rational scaled = exponent * grid;
  if (boost::multiprecision::denominator(scaled) != 1) {
    throw grid_error("exponent " + rational_to_string(exponent) +
                     " is off the (1/" + std::to_string(grid) + ")Z grid");
  }
  return boost::multiprecision::numerator(scaled).convert_to<std::int64_t>();
}

FormalSeries::FormalSeries(std::int64_t grid, const Rational& offset,
                           std::int64_t order_units)
    : grid_(grid), order_units_(order_units) {
  if (grid <= 0) throw grid_error("grid denominator must be positive");
  if (order_units < 0) throw domain_error("series order must be >= 0");
  offset_units_ = to_grid_units(offset, grid);
}

FormalSeries FormalSeries::one(std::int64_t grid, std::int64_t order_units) {
  FormalSeries s(grid, 0, order_units);
  if (order_units > 0) s.set(0, 1);
  return s;
}

FormalSeries FormalSeries::monomial(std::int64_t grid, const Rational& offset,
                                    const Rational& coefficient,
                                    std::int64_t order_units) {
  FormalSeries s(grid, offset, order_units);
  if (order_units > 0) s.set(0, coefficient);
  return s;
}

void FormalSeries::set(std::int64_t units, const Rational& value) {
  if (units < 0 || units >= order_units_) {
    throw domain_error("series exponent outside [0, order)");
  }
  if (value == 0) {
    coeff_.erase(units);
  } else {
    coeff_[units] = value;
  }
}

void FormalSeries::add(std::int64_t units, const Rational& value) {
  if (units < 0 || units >= order_units_) {
    throw domain_error("series exponent outside [0, order)");
  }
  auto it = coeff_.find(units);
  if (it == coeff_.end()) {
    if (value != 0) coeff_.emplace(units, value);
    return;
  }
  it->second += value;
  if (it->second == 0) coeff_.erase(it);
}

const Rational& FormalSeries::coefficient(std::int64_t units) const {
  auto it = coeff_.find(units);
  return it == coeff_.end() ? kZero : it->second;
}

const Rational& FormalSeries::coefficient(const Rational& exponent) const {
  return coefficient(to_grid_units(exponent, grid_));
}

bool FormalSeries::is_one() const {
  return offset_units_ == 0 && coeff_.size() == 1 &&
         coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
}

bool FormalSeries::operator==(const FormalSeries& other) const {
  return grid_ == other.grid_ && offset_units_ == other.offset_units_ &&
         order_units_ == other.order_units_ && coeff_ == other.coeff_;
}

FormalSeries FormalSeries::operator*(const FormalSeries& other) const {
  if (grid_ != other.grid_) {
    throw grid_error("series multiplication requires a common grid");
  }
  FormalSeries out(grid_, Rational(offset_units_ + other.offset_units_, grid_),
                   std::min(order_units_, other.order_units_));
  for (const auto& [ka, ca] : coeff_) {
    if (ka >= out.order_units_) break;
    for (const auto& [kb, cb] : other.coeff_) {
      const std::int64_t k = ka + kb;
      if (k >= out.order_units_) break;
      out.add(k, Rational(ca * cb));
    }
  }
  return out;
}

FormalSeries FormalSeries::times_sparse(
    const std::map<std::int64_t, Rational>& poly) const {
  FormalSeries out(grid_, offset(), order_units_);
  for (const auto& [ka, ca] : coeff_) {
    for (const auto& [kb, cb] : poly) {
      const std::int64_t k = ka + kb;
      if (k >= order_units_) break;
      out.add(k, Rational(ca * cb));
    }
  }
  return out;
}

FormalSeries FormalSeries::operator+(const FormalSeries& other) const {
  if (grid_ != other.grid_) {
    throw grid_error("series addition requires a common grid");
  }
  const std::int64_t off = std::min(offset_units_, other.offset_units_);
  const std::int64_t abs_order =
      std::min(offset_units_ + order_units_,
               other.offset_units_ + other.order_units_);
  FormalSeries out(grid_, Rational(off, grid_), abs_order - off);
  for (const auto& [k, c] : coeff_) {
    const std::int64_t rel = k + offset_units_ - off;
    if (rel < out.order_units_) out.add(rel, c);
  }
  for (const auto& [k, c] : other.coeff_) {
    const std::int64_t rel = k + other.offset_units_ - off;
    if (rel < out.order_units_) out.add(rel, c);
  }
  return out;
}

FormalSeries FormalSeries::operator-(const FormalSeries& other) const {
  return *this + other.scaled(-1);
}

FormalSeries FormalSeries::scaled(const Rational& factor) const {
  FormalSeries out(grid_, offset(), order_units_);
  if (factor == 0) return out;
  for (const auto& [k, c] : coeff_) out.set(k, Rational(c * factor));
  return out;
}

FormalSeries FormalSeries::inverse() const {
  const Rational& lead = coefficient(std::int64_t{0});
  if (lead == 0) {
    throw domain_error(
        "series inverse requires a nonzero coefficient at the offset");
  }
  FormalSeries out(grid_, Rational(-offset_units_, grid_), order_units_);
  if (order_units_ == 0) return out;
  // b_0 = 1/a_0;  b_k = -(sum_{j>=1} a_j b_{k-j}) / a_0
  out.set(0, Rational(1 / lead));
  for (std::int64_t k = 1; k < order_units_; ++k) {
    Rational acc = 0;
    for (const auto& [j, aj] : coeff_) {
      if (j == 0) continue;
      if (j > k) break;
      const Rational& b = out.coefficient(k - j);
      if (b != 0) acc += aj * b;
    }
    if (acc != 0) out.set(k, Rational(-acc / lead));
  }
  return out;
}

FormalSeries FormalSeries::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FormalSeries acc = FormalSeries::one(grid_, order_units_);
  FormalSeries base = *this;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1UL;
    if (e != 0) base = base * base;
  }
  return acc;
}

FormalSeries FormalSeries::truncated(std::int64_t order_units) const {
  FormalSeries out(grid_, offset(), std::min(order_units, order_units_));
  for (const auto& [k, c] : coeff_) {
    if (k >= out.order_units_) break;
    out.set(k, c);
  }
  return out;
}

FormalSeries FormalSeries::with_grid(std::int64_t new_grid) const {
  if (new_grid % grid_ != 0) {
    throw grid_error("grid refinement requires a multiple of the old grid");
  }
  const std::int64_t scale = new_grid / grid_;
  FormalSeries out(new_grid, offset(), order_units_ * scale);
  for (const auto& [k, c] : coeff_) out.set(k * scale, c);
  return out;
}

FormalSeries FormalSeries::shifted(const Rational& delta) const {
  FormalSeries out(grid_, Rational(offset() + delta), order_units_);
  out.coeff_ = coeff_;
  return out;
}

std::complex<double> FormalSeries::value_at(const ModularParameter& tau) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [k, c] : coeff_) {
    acc += to_double(c) * tau.q_pow(Rational(offset_units_ + k, grid_));
  }
  return acc;
}

nlohmann::ordered_json FormalSeries::to_json() const {
  nlohmann::ordered_json j;
  j["grid_denominator"] = grid_;
  j["offset"] = rational_to_string(offset());
  j["order"] = rational_to_string(order());
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [k, c] : coeff_) {
    nlohmann::ordered_json term;
    term["exponent"] = rational_to_string(Rational(k, grid_));
    term["coefficient"] = rational_to_string(c);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

FormalSeries FormalSeries::from_json(const nlohmann::ordered_json& j) {
  const std::int64_t grid = j.at("grid_denominator").get<std::int64_t>();
  const Rational offset = parse_rational(j.at("offset").get<std::string>());
  const Rational order = parse_rational(j.at("order").get<std::string>());
  FormalSeries out(grid, offset, to_grid_units(order, grid));
  for (const auto& term : j.at("terms")) {
    const Rational e = parse_rational(term.at("exponent").get<std::string>());
    const Rational c =
        parse_rational(term.at("coefficient").get<std::string>());
    out.set(to_grid_units(e, grid), c);
  }
  return out;
}

std::string FormalSeries::to_csv() const {
  std::ostringstream os;
  os << "exponent,coefficient\n";
  for (const auto& [k, c] : coeff_) {
    os << rational_to_string(Rational(offset_units_ + k, grid_)) << ","
       << rational_to_string(c) << "\n";
  }
  return os.str();
}

}  // namespace spectra
