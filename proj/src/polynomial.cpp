#include "picardlab/polynomial.hpp"

namespace picardlab {

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  const Rational lead = leading();
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v /= lead;
  return UnivariatePolynomial(std::move(c));
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divmod(const UnivariatePolynomial& a,
                                                                                  const UnivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {UnivariatePolynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial UnivariatePolynomial::gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

UnivariatePolynomial UnivariatePolynomial::squarefree_part() const {
  if (degree() <= 0) return monic();
  return divmod(*this, gcd(*this, derivative())).first.monic();
}

}  // namespace picardlab
