#include "qtree/qpoly.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <utility>

#include "qtree/errors.hpp"

namespace qtree {

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::constant(const Integer& c) { return QPoly(std::vector<Integer>{c}); }

QPoly QPoly::monomial(std::size_t k, const Integer& c) {
  std::vector<Integer> v(k + 1, 0);
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> v(k, 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

bool QPoly::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.begin() + coeffs_.size() / 2, coeffs_.rbegin());
}

bool try_divexact(const QPoly& a, const QPoly& b, QPoly& quotient) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) {
    quotient = QPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;

  std::vector<Integer> rem = a.coeffs();
  const auto& den = b.coeffs();
  const std::size_t db = den.size() - 1;
  std::vector<Integer> quot(rem.size() - db, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer& top = rem[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den[db].get_mpz_t())) return false;
    Integer c = top / den[db];
    quot[i] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) return false;
  }
  quotient = QPoly(std::move(quot));
  return true;
}

QPoly divexact(const QPoly& a, const QPoly& b) {
  QPoly q;
  if (!try_divexact(a, b, q)) throw NotDivisible();
  return q;
}

Integer eval(const QPoly& p, const Integer& x) {
  Integer acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

QPoly q_integer(std::size_t n) { return QPoly(std::vector<Integer>(n, 1)); }

QPoly q_factorial(std::size_t n) {
  QPoly r{1};
  for (std::size_t k = 2; k <= n; ++k) r *= q_integer(k);
  return r;
}

namespace {

// Rows of the q-Pascal triangle, grown on demand. Rows are never modified
// once published.
class BinomialTable {
 public:
  QPoly get(std::size_t n, std::size_t k) {
    {
      std::shared_lock lock(mu_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mu_);
    if (rows_.empty()) rows_.push_back({QPoly{1}});
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      const std::size_t m = rows_.size();
      std::vector<QPoly> row(m + 1);
      row[0] = QPoly{1};
      row[m] = QPoly{1};
      for (std::size_t j = 1; j < m; ++j) row[j] = prev[j - 1] + prev[j].shifted(j);
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mu_;
  std::vector<std::vector<QPoly>> rows_;
};

BinomialTable& binomial_table() {
  static BinomialTable table;
  return table;
}

class CyclotomicTable {
 public:
  QPoly get(std::size_t d) {
    {
      std::shared_lock lock(mu_);
      if (auto it = cache_.find(d); it != cache_.end()) return it->second;
    }
    // (q^d - 1) / prod_{e | d, e < d} Phi_e
    QPoly num = QPoly::monomial(d) - QPoly{1};
    QPoly den{1};
    for (std::size_t e = 1; e < d; ++e) {
      if (d % e == 0) den *= get(e);
    }
    QPoly phi = divexact(num, den);
    std::unique_lock lock(mu_);
    return cache_.emplace(d, std::move(phi)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<std::size_t, QPoly> cache_;
};

CyclotomicTable& cyclotomic_table() {
  static CyclotomicTable table;
  return table;
}

}  // namespace

QPoly q_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  return binomial_table().get(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

QPoly q_multinomial(std::span<const std::size_t> parts) {
  QPoly r{1};
  std::size_t running = parts.empty() ? 0 : parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    running += parts[i];
    r *= q_binomial(static_cast<long>(running), static_cast<long>(parts[i]));
  }
  return r;
}

QPoly q_multinomial(std::initializer_list<std::size_t> parts) {
  return q_multinomial(std::span<const std::size_t>(parts.begin(), parts.size()));
}

QPoly cyclotomic(std::size_t d) {
  if (d == 0) throw Error("cyclotomic index must be positive");
  return cyclotomic_table().get(d);
}

std::size_t totient(std::size_t d) {
  std::size_t result = d;
  std::size_t n = d;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicFactorization cyclotomic_factor(const QPoly& p) {
  if (p.is_zero()) throw ZeroInput("cannot factor the zero polynomial");
  CyclotomicFactorization f;
  const auto& c = p.coeffs();
  while (c[f.monomial_exponent] == 0) ++f.monomial_exponent;
  f.remainder = QPoly(std::vector<Integer>(c.begin() + static_cast<long>(f.monomial_exponent), c.end()));

  // phi(d) >= sqrt(d/2), so no Phi_d with d > 2 deg^2 can divide.
  const auto deg = static_cast<std::size_t>(f.remainder.degree());
  const std::size_t limit = 2 * deg * deg;
  for (std::size_t d = 1; d <= limit && f.remainder.degree() > 0; ++d) {
    if (totient(d) > static_cast<std::size_t>(f.remainder.degree())) continue;
    const QPoly phi = cyclotomic(d);
    QPoly quotient;
    while (f.remainder.degree() >= phi.degree() && try_divexact(f.remainder, phi, quotient)) {
      f.remainder = std::move(quotient);
      ++f.factors[d];
    }
  }
  return f;
}

QPoly reassemble(const CyclotomicFactorization& f) {
  QPoly r = f.remainder.shifted(f.monomial_exponent);
  for (const auto& [d, mult] : f.factors) {
    for (std::size_t i = 0; i < mult; ++i) r *= cyclotomic(d);
  }
  return r;
}

namespace {

std::string render(const QPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Integer mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) os << '-';
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i == 1) {
      os << 'q';
    } else if (i > 1) {
      os << (latex ? "q^{" : "q^") << i << (latex ? "}" : "");
    }
  }
  return os.str();
}

}  // namespace

std::string to_plain(const QPoly& p) { return render(p, false); }
std::string to_latex(const QPoly& p) { return render(p, true); }

std::string factorization_latex(const CyclotomicFactorization& f) {
  std::ostringstream os;
  if (f.monomial_exponent == 1) os << "q";
  if (f.monomial_exponent > 1) os << "q^{" << f.monomial_exponent << "}";
  for (const auto& [d, mult] : f.factors) {
    os << "\\Phi_{" << d << "}";
    if (mult > 1) os << "^{" << mult << "}";
  }
  if (!f.remainder.is_one()) os << "\\left(" << to_latex(f.remainder) << "\\right)";
  std::string s = os.str();
  return s.empty() ? "1" : s;
}

}  // namespace qtree
