#pragma once

// Ricardian trade in log space: rows are commodities, columns countries.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropcay/trop_core.hpp"

namespace tropcay::ricardo {

class Economy {
 public:
  // All entries must be finite.
  explicit Economy(TropMatrix log_costs);

  const TropMatrix& log_costs() const { return log_costs_; }
  std::size_t commodities() const { return log_costs_.rows(); }
  std::size_t countries() const { return log_costs_.cols(); }
  const Rational& cost(std::size_t i, std::size_t k) const { return log_costs_(i, k).value(); }

 private:
  TropMatrix log_costs_;
};

struct ApproximateEconomy {
  Economy economy;
  bool approximate = true;
  int digits = 0;
};

// Base-10 logarithms of positive decimal production coefficients, rounded to
// `digits` decimal places. The result is flagged approximate.
ApproximateEconomy economy_from_production(const std::vector<std::vector<std::string>>& coefficients, int digits);

struct WagePriceSystem {
  RationalVector log_wages;   // one per country
  RationalVector log_prices;  // one per commodity
  friend bool operator==(const WagePriceSystem&, const WagePriceSystem&) = default;
};

struct Classification {
  bool sharing = false;
  bool covering = false;
};

bool is_admissible(const Economy& e, const WagePriceSystem& s);

// logR (.)min logw
RationalVector prices_from_wages(const Economy& e, const RationalVector& log_wages);
// logR^# (.)max logp, i.e. w_k = max_i (p_i - r_ik)
RationalVector wages_from_prices(const Economy& e, const RationalVector& log_prices);

RationalVector shapley_T(const Economy& e, const RationalVector& log_prices);
RationalVector dual_shapley(const Economy& e, const RationalVector& log_wages);

// Throws AdmissibilityError when s is not admissible.
std::set<std::pair<std::size_t, std::size_t>> competitive_pairs(const Economy& e, const WagePriceSystem& s);

Classification classify(const Economy& e, const WagePriceSystem& s);

// Lowers the wages with the dual Shapley operator and prices them.
WagePriceSystem equilibrate(const Economy& e, const RationalVector& log_wages);
// Price-side counterpart: projects the prices with T and sets covering wages.
WagePriceSystem equilibrate_prices(const Economy& e, const RationalVector& log_prices);

}  // namespace tropcay::ricardo
