#include "mt/modular_symbol.hpp"

namespace mt {

RationalModularSymbol::RationalModularSymbol(std::shared_ptr<const ManinSymbolSpace> space, RationalVector coords,
                                             SymbolSign sign)
    : space_(std::move(space)), coords_(std::move(coords)), sign_(sign) {
  if (static_cast<std::size_t>(coords_.size()) != space_->dimension())
    throw Error(ErrorCode::InvalidInput, "coordinate vector does not match the space dimension");
  values_.resize(space_->generator_count());
  for (std::size_t g = 0; g < values_.size(); ++g) {
    Rational v = 0;
    for (const auto& [i, c] : space_->expression(g)) v += c * coords_(static_cast<Eigen::Index>(i));
    values_[g] = v;
  }
}

bool RationalModularSymbol::is_zero() const {
  for (Eigen::Index i = 0; i < coords_.size(); ++i)
    if (coords_(i) != 0) return false;
  return true;
}

Rational RationalModularSymbol::from_infinity(const Cusp& r) const {
  Rational v = 0;
  for (auto g : space_->decompose_from_infinity(r)) v += values_[g];
  return v;
}

Rational RationalModularSymbol::evaluate(const Divisor& d) const {
  return from_infinity(d.minus) - from_infinity(d.plus);
}

RationalModularSymbol RationalModularSymbol::scaled(const Rational& factor) const {
  return {space_, (coords_ * factor).eval(), sign_};
}

RationalModularSymbol operator+(const RationalModularSymbol& a, const RationalModularSymbol& b) {
  return {a.space_, (a.coords_ + b.coords_).eval(), a.sign_ == b.sign_ ? a.sign_ : SymbolSign::None};
}

RationalModularSymbol operator-(const RationalModularSymbol& a, const RationalModularSymbol& b) {
  return {a.space_, (a.coords_ - b.coords_).eval(), a.sign_ == b.sign_ ? a.sign_ : SymbolSign::None};
}

RationalModularSymbol zero_symbol(std::shared_ptr<const ManinSymbolSpace> space) {
  const auto n = static_cast<Eigen::Index>(space->dimension());
  return {std::move(space), RationalVector::Zero(n)};
}

std::pair<RationalModularSymbol, RationalModularSymbol> involution_split(const RationalModularSymbol& phi) {
  const RationalMatrix j = phi.space().involution_matrix();
  const RationalVector flipped = j * phi.coords();
  const Rational half(1, 2);
  RationalVector plus = ((phi.coords() + flipped) * half).eval();
  RationalVector minus = ((phi.coords() - flipped) * half).eval();
  return {RationalModularSymbol(phi.space_ptr(), std::move(plus), SymbolSign::Plus),
          RationalModularSymbol(phi.space_ptr(), std::move(minus), SymbolSign::Minus)};
}

}  // namespace mt
