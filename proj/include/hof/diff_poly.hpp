#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hof {

// Exact integer-coefficient polynomial in the jet variables
// kappa^(0), kappa^(1), ...  A monomial is an exponent vector with trailing
// zeros trimmed; the zero polynomial has no terms.
class DiffPoly {
 public:
  using Monomial = std::vector<int>;

  DiffPoly() = default;
  static DiffPoly constant(std::int64_t c);
  static DiffPoly kappa(int j);  // the variable kappa^(j)

  DiffPoly operator+(const DiffPoly& o) const;
  DiffPoly operator-(const DiffPoly& o) const;
  DiffPoly operator*(const DiffPoly& o) const;
  DiffPoly scaled(std::int64_t c) const;

  // Formal arclength differentiation: D kappa^(j) = kappa^(j+1), extended by
  // the product rule.
  DiffPoly arclength_derivative() const;

  double evaluate(std::span<const double> jet) const;

  bool is_zero() const { return terms_.empty(); }
  int max_variable() const;  // largest j with kappa^(j) present, -1 if none
  // Every monomial has total weight w under weight(kappa^(j)) = j + 1.
  bool is_homogeneous(int weight) const;
  int term_count() const { return static_cast<int>(terms_.size()); }

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  std::string to_string() const;

 private:
  void add_term(Monomial m, std::int64_t c);
  std::map<Monomial, std::int64_t> terms_;
};

}  // namespace hof
