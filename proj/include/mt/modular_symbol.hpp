#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "mt/manin.hpp"

namespace mt {

enum class SymbolSign { None, Plus, Minus };

/// A Q-valued modular symbol on Gamma_0(N): a functional on the Manin-symbol
/// quotient, stored as its values on the basis generators.
class RationalModularSymbol {
 public:
  RationalModularSymbol(std::shared_ptr<const ManinSymbolSpace> space, RationalVector coords,
                        SymbolSign sign = SymbolSign::None);

  const ManinSymbolSpace& space() const { return *space_; }
  const std::shared_ptr<const ManinSymbolSpace>& space_ptr() const { return space_; }
  const RationalVector& coords() const { return coords_; }
  SymbolSign sign() const { return sign_; }
  bool is_zero() const;

  /// phi(D(c : d)) for every generator of P^1(Z/NZ).
  const std::vector<Rational>& generator_values() const { return values_; }

  Rational evaluate(const Divisor& divisor) const;
  /// phi({oo} - {r}).
  Rational from_infinity(const Cusp& r) const;

  RationalModularSymbol scaled(const Rational& factor) const;
  RationalModularSymbol with_sign(SymbolSign sign) const { return {space_, coords_, sign}; }

  friend RationalModularSymbol operator+(const RationalModularSymbol& a, const RationalModularSymbol& b);
  friend RationalModularSymbol operator-(const RationalModularSymbol& a, const RationalModularSymbol& b);

 private:
  std::shared_ptr<const ManinSymbolSpace> space_;
  RationalVector coords_;
  SymbolSign sign_;
  std::vector<Rational> values_;
};

inline Rational evaluate(const RationalModularSymbol& phi, const Divisor& d) { return phi.evaluate(d); }

/// The zero symbol on a space.
RationalModularSymbol zero_symbol(std::shared_ptr<const ManinSymbolSpace> space);

/// (phi+, phi-) with phi = phi+ + phi- and phi+-(iota D) = +-phi+-(D).
std::pair<RationalModularSymbol, RationalModularSymbol> involution_split(const RationalModularSymbol& phi);

/// D -> phi(m D) with m{a/c} = {m a / c}: phi restricted along diag(m, 1).
class ScaledSymbol {
 public:
  ScaledSymbol(const RationalModularSymbol& phi, std::int64_t m) : phi_(&phi), m_(m) {}

  Rational evaluate(const Divisor& d) const { return phi_->evaluate(d.transformed(matrix())); }
  Rational from_infinity(const Cusp& r) const { return phi_->from_infinity(matrix()(r)); }
  Mat2 matrix() const { return {m_, 0, 0, 1}; }

 private:
  const RationalModularSymbol* phi_;
  std::int64_t m_;
};

inline ScaledSymbol scale_action(const RationalModularSymbol& phi, std::int64_t m) { return {phi, m}; }

}  // namespace mt
