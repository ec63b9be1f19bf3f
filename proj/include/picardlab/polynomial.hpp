#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picardlab/arith.hpp"

namespace picardlab {

// Sparse polynomial in N variables with exact rational coefficients.
// Zero coefficients are never stored.
template <std::size_t N>
class Polynomial {
 public:
  using Exponent = std::array<unsigned, N>;
  using TermMap = std::map<Exponent, Rational>;

  Polynomial() = default;

  static Polynomial constant(const Rational& c) { return monomial(Exponent{}, c); }

  static Polynomial variable(std::size_t i) {
    Exponent e{};
    e.at(i) = 1;
    return monomial(e, 1);
  }

  static Polynomial monomial(const Exponent& e, const Rational& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static unsigned degree_of(const Exponent& e) {
    unsigned d = 0;
    for (unsigned v : e) d += v;
    return d;
  }

  // -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(degree_of(e)));
    return d;
  }

  // Lowest total degree of a term; -1 for the zero polynomial.
  int order() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      const int de = static_cast<int>(degree_of(e));
      if (d < 0 || de < d) d = de;
    }
    return d;
  }

  bool is_homogeneous() const { return is_zero() || order() == total_degree(); }

  Polynomial homogeneous_part(unsigned d) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      if (degree_of(e) == d) out.terms_.emplace(e, c);
    }
    return out;
  }

  Polynomial truncated(unsigned max_degree) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      if (degree_of(e) <= max_degree) out.terms_.emplace(e, c);
    }
    return out;
  }

  Polynomial derivative(std::size_t i) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent f = e;
      f[i] -= 1;
      out.add_term(f, c * e[i]);
    }
    return out;
  }

  Rational evaluate(const std::array<Rational, N>& point) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < N; ++i) {
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      }
      total += t;
    }
    return total;
  }

  // Every exponent of variable i is divisible by `modulus`.
  bool exponents_divisible(std::size_t i, unsigned modulus) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] % modulus == 0; });
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Rational& k, const Polynomial& p) {
    Polynomial out;
    if (k == 0) return out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, k * c);
    return out;
  }

  // Product, optionally dropping every term of total degree above max_degree.
  static Polynomial multiply(const Polynomial& a, const Polynomial& b,
                             std::optional<unsigned> max_degree = std::nullopt) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      const unsigned da = degree_of(ea);
      if (max_degree && da > *max_degree) continue;
      for (const auto& [eb, cb] : b.terms_) {
        if (max_degree && da + degree_of(eb) > *max_degree) continue;
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

  Polynomial pow(unsigned k, std::optional<unsigned> max_degree = std::nullopt) const {
    Polynomial result = constant(1);
    Polynomial base = max_degree ? truncated(*max_degree) : *this;
    while (k > 0) {
      if (k & 1U) result = multiply(result, base, max_degree);
      k >>= 1U;
      if (k > 0) base = multiply(base, base, max_degree);
    }
    return result;
  }

  // Substitute images[i] for variable i.
  template <std::size_t M>
  Polynomial<M> compose(const std::array<Polynomial<M>, N>& images,
                        std::optional<unsigned> max_degree = std::nullopt) const {
    // Cache powers of each image.
    std::array<std::vector<Polynomial<M>>, N> powers;
    for (std::size_t i = 0; i < N; ++i) powers[i].push_back(Polynomial<M>::constant(1));
    const auto power = [&](std::size_t i, unsigned k) -> const Polynomial<M>& {
      while (powers[i].size() <= k) {
        powers[i].push_back(Polynomial<M>::multiply(powers[i].back(), images[i], max_degree));
      }
      return powers[i][k];
    };
    Polynomial<M> out;
    for (const auto& [e, c] : terms_) {
      Polynomial<M> term = Polynomial<M>::constant(c);
      for (std::size_t i = 0; i < N && !term.is_zero(); ++i) {
        if (e[i] > 0) term = Polynomial<M>::multiply(term, power(i, e[i]), max_degree);
      }
      out += term;
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Terms by decreasing total degree, then decreasing exponent; "c*x^i*y^j".
  std::string to_string(const std::array<std::string, N>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Rational>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
      const unsigned da = degree_of(a.first), db = degree_of(b.first);
      if (da != db) return da > db;
      return a.first > b.first;
    });
    std::string out;
    for (const auto& [e, c] : items) {
      std::string mono;
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      const Rational mag = abs_value(c);
      std::string coeff = picardlab::to_string(mag);
      std::string body;
      if (mono.empty()) body = coeff;
      else if (mag == 1) body = mono;
      else body = coeff + "*" + mono;
      if (out.empty()) out = (c < 0 ? "-" : "") + body;
      else out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  TermMap terms_;
};

// Dense univariate polynomial over Q; coeffs[i] multiplies t^i, no trailing zeros.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;
  Rational evaluate(const Rational& t) const;

  // Quotient and remainder of Euclidean division; divisor must be nonzero.
  static std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                                      const UnivariatePolynomial& b);
  // Monic gcd (zero if both are zero).
  static UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

  // f / gcd(f, f'); its degree is the number of distinct complex roots.
  UnivariatePolynomial squarefree_part() const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace picardlab
