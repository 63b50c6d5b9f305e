#include "tropcay/ricardo.hpp"

#include <cmath>
#include <cstdio>

#include "tropcay/errors.hpp"

namespace tropcay::ricardo {

Economy::Economy(TropMatrix log_costs) : log_costs_(std::move(log_costs)) {
  if (!log_costs_.all_finite()) throw PreconditionError("production coefficients must be finite");
}

ApproximateEconomy economy_from_production(const std::vector<std::vector<std::string>>& coefficients, int digits) {
  if (digits < 0 || digits > 15) throw PreconditionError("log precision must be between 0 and 15 digits");
  std::vector<std::vector<TropNum>> rows;
  for (const auto& r : coefficients) {
    std::vector<TropNum> row;
    for (const auto& text : r) {
      const Rational value = parse_rational(text);
      if (value <= 0) throw PreconditionError("production coefficient " + text + " is not positive");
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*f", digits, std::log10(value.get_d()));
      row.emplace_back(parse_rational(buf));
    }
    rows.push_back(std::move(row));
  }
  return {Economy(TropMatrix::from_rows(rows)), true, digits};
}

namespace {

void check_system(const Economy& e, const WagePriceSystem& s) {
  if (s.log_wages.size() != e.countries()) throw DimensionError("wage vector length must equal the country count");
  if (s.log_prices.size() != e.commodities()) {
    throw DimensionError("price vector length must equal the commodity count");
  }
}

}  // namespace

bool is_admissible(const Economy& e, const WagePriceSystem& s) {
  check_system(e, s);
  for (std::size_t i = 0; i < e.commodities(); ++i)
    for (std::size_t k = 0; k < e.countries(); ++k) {
      if (e.cost(i, k) + s.log_wages[k] < s.log_prices[i]) return false;
    }
  return true;
}

RationalVector prices_from_wages(const Economy& e, const RationalVector& log_wages) {
  return mat_vec(e.log_costs(), log_wages, Orientation::Min);
}

RationalVector wages_from_prices(const Economy& e, const RationalVector& log_prices) {
  return mat_vec(sharp(e.log_costs()), log_prices, Orientation::Max);
}

RationalVector shapley_T(const Economy& e, const RationalVector& log_prices) {
  return prices_from_wages(e, wages_from_prices(e, log_prices));
}

RationalVector dual_shapley(const Economy& e, const RationalVector& log_wages) {
  return wages_from_prices(e, prices_from_wages(e, log_wages));
}

std::set<std::pair<std::size_t, std::size_t>> competitive_pairs(const Economy& e, const WagePriceSystem& s) {
  if (!is_admissible(e, s)) throw AdmissibilityError("wage-price system is not admissible");
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < e.commodities(); ++i)
    for (std::size_t k = 0; k < e.countries(); ++k) {
      if (e.cost(i, k) + s.log_wages[k] == s.log_prices[i]) out.emplace(i, k);
    }
  return out;
}

Classification classify(const Economy& e, const WagePriceSystem& s) {
  check_system(e, s);
  return {prices_from_wages(e, s.log_wages) == s.log_prices, wages_from_prices(e, s.log_prices) == s.log_wages};
}

WagePriceSystem equilibrate(const Economy& e, const RationalVector& log_wages) {
  RationalVector w = dual_shapley(e, log_wages);
  RationalVector p = prices_from_wages(e, w);
  return {std::move(w), std::move(p)};
}

WagePriceSystem equilibrate_prices(const Economy& e, const RationalVector& log_prices) {
  RationalVector p = shapley_T(e, log_prices);
  RationalVector w = wages_from_prices(e, p);
  return {std::move(w), std::move(p)};
}

}  // namespace tropcay::ricardo
