#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qtree {

using Integer = mpz_class;

/**
 * Element of Z[q] stored densely in ascending order: coeffs()[i] is the
 * coefficient of q^i. The representation is always normalized, so the zero
 * polynomial has no stored coefficients and the last stored one is nonzero.
 */
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<Integer> coeffs);

  static QPoly constant(const Integer& c);
  /// c * q^k
  static QPoly monomial(std::size_t k, const Integer& c = 1);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^i; zero past the degree.
  Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;

  /// Multiplication by q^k.
  QPoly shifted(std::size_t k) const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// True when the coefficient sequence reads the same backwards.
  bool is_palindromic() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Exact quotient a / b in Z[q]. Throws DivisionByZero or NotDivisible.
QPoly divexact(const QPoly& a, const QPoly& b);

/// Quotient if b divides a exactly, otherwise false. b must be nonzero.
bool try_divexact(const QPoly& a, const QPoly& b, QPoly& quotient);

Integer eval(const QPoly& p, const Integer& x);

/// [n]_q = 1 + q + ... + q^{n-1}
QPoly q_integer(std::size_t n);
/// [n]_q! = [1]_q [2]_q ... [n]_q
QPoly q_factorial(std::size_t n);
/// Gaussian binomial via the q-Pascal recurrence; zero when k < 0 or k > n.
QPoly q_binomial(long n, long k);
/**
 * q-multinomial of (a_1, ..., a_k) as the telescoping product
 *   binom(a_1+a_2; a_2) binom(a_1+a_2+a_3; a_3) ... binom(a_1+...+a_k; a_k).
 * Empty or single-part input gives 1.
 */
QPoly q_multinomial(std::span<const std::size_t> parts);
QPoly q_multinomial(std::initializer_list<std::size_t> parts);

/// d-th cyclotomic polynomial, d >= 1.
QPoly cyclotomic(std::size_t d);
/// Euler's totient.
std::size_t totient(std::size_t d);

struct CyclotomicFactorization {
  std::size_t monomial_exponent = 0;
  /// index d -> multiplicity of Phi_d
  std::map<std::size_t, std::size_t> factors;
  QPoly remainder;

  /// p == q^k * prod Phi_d^m with no leftover factor.
  bool is_cyclotomic_product() const { return remainder.is_one(); }
};

/// Strips q^k and every cyclotomic factor. Throws ZeroInput on p == 0.
CyclotomicFactorization cyclotomic_factor(const QPoly& p);

/// Reassembles q^k * prod Phi_d^m * remainder.
QPoly reassemble(const CyclotomicFactorization& f);

/// "1 + 2q + 2q^2 + q^3"; "0" for zero.
std::string to_plain(const QPoly& p);
/// LaTeX form with braces around exponents.
std::string to_latex(const QPoly& p);
/// "q^{k}\Phi_{2}^{2}\Phi_{3}"; only meaningful for cyclotomic products.
std::string factorization_latex(const CyclotomicFactorization& f);

}  // namespace qtree
