#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kmono {

// Sorted positive observations with empirical-CDF access.
class Sample {
public:
  explicit Sample(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }
  double median() const;

  // Empirical CDF, right-continuous: (1/n) #{X_i <= x}.
  double ecdf(double x) const;

  static Sample from_csv(const std::string& path);
  void to_csv(const std::string& path) const;

private:
  std::vector<double> values_;  // ascending
};

}  // namespace kmono
