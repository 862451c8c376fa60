#pragma once

#include <cstdint>
#include <vector>

#include "kmono/sample.hpp"

namespace kmono {

// x^e for x >= 0 by binary exponentiation; the base is clamped at 0 so a
// tiny negative rounding residue near a kernel edge cannot produce NaN.
double pow_nonneg(double x, unsigned e);

// Beta(1,k) scale kernel k*(a-x)_+^{k-1} / a^k.  Evaluates to exactly 0 for
// x >= a, for every k including k = 1.
double eval_kernel(int k, double a, double x);

// Closed-endpoint variant used on the likelihood path for k = 1, where the
// kernel is an indicator and the value at x = a matters: 1{x <= a}/a.
// Identical to eval_kernel for k >= 2.
double eval_kernel_closed(int k, double a, double x);

// Atomic mixing measure: support a_1 < ... < a_m with weights w_i > 0.
// Construction sorts, validates, and coalesces support points closer than
// 1e-10 * a_m (weights summed) to keep downstream linear systems sane.
class MixingMeasure {
public:
  MixingMeasure(std::vector<double> support, std::vector<double> weights);

  std::size_t size() const { return support_.size(); }
  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }
  double mass() const;  // recomputed, never cached
  double max_support() const { return support_.back(); }

  // Mixing distribution function F(t) = sum of weights at atoms <= t.
  double cdf(double t) const;

private:
  std::vector<double> support_;
  std::vector<double> weights_;
};

struct DerivativeValue {
  double value = 0.0;
  // set when j = k-1 is requested exactly at a knot; the value is the
  // left limit
  bool at_knot = false;
};

// A k-monotone mixture g(x) = sum_i w_i * k (a_i - x)_+^{k-1} / a_i^k.
class KMonotoneMixture {
public:
  KMonotoneMixture(int k, MixingMeasure mixing);

  int order() const { return k_; }
  const MixingMeasure& mixing() const { return mixing_; }
  double mass() const { return mixing_.mass(); }

  // Density value; 0 for x >= a_m.  Nonincreasing in x.
  double operator()(double x) const;

  // j-th derivative, 0 <= j <= k-1.  For j = k-1 at a knot the left limit
  // is returned with the at_knot flag set.
  DerivativeValue derivative(int j, double x) const;

  // G(t) = integral of g over [0, t].
  double cdf(double t) const;

  // n i.i.d. draws; atom chosen by weight, then inverse kernel CDF
  // X = a * (1 - V^(1/k)).  Requires mass = 1 within 1e-12.
  Sample sample(std::size_t n, std::uint64_t seed) const;

private:
  int k_;
  MixingMeasure mixing_;
};

// Envelope of Lemma-style k-monotone densities: any k-monotone density g
// satisfies g(x) <= (1/x)(1 - 1/k)^{k-1} for x > 0, k >= 2.
double density_bound(int k, double x);

}  // namespace kmono
