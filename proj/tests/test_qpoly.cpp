#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "qtree/errors.hpp"
#include "qtree/qpoly.hpp"

using namespace qtree;

namespace {

// Gaussian binomial from its combinatorial meaning: k-subsets of {0..n-1}
// weighted by q^(sum - k(k-1)/2).
QPoly subset_sum_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<Integer> c(static_cast<std::size_t>(k * (n - k) + 1), 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) sum += i;
    }
    c[static_cast<std::size_t>(sum - k * (k - 1) / 2)] += 1;
  }
  return QPoly(std::move(c));
}

long pascal(int n, int k) {
  std::vector<std::vector<long>> t(n + 1, std::vector<long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    t[i][0] = 1;
    for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][k];
}

QPoly random_poly(std::mt19937_64& rng) {
  std::vector<Integer> c(1 + rng() % 6);
  for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
  c.back() = (rng() % 2) ? 1 + static_cast<long>(rng() % 4) : -1 - static_cast<long>(rng() % 4);
  return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("normalization keeps no trailing zeros") {
  CHECK(QPoly{0, 0}.is_zero());
  CHECK(QPoly{1, 2, 0}.coeffs().size() == 2);
  CHECK(QPoly{}.degree() == -1);
  CHECK(QPoly{3, 0, 1}.degree() == 2);
}

TEST_CASE("poly_add") {
  CHECK(QPoly{1, 1} + QPoly{} == QPoly{1, 1});
  CHECK(QPoly{1, 1} + QPoly{0, 1, 1} == QPoly{1, 2, 1});
  CHECK(q_integer(2) + q_integer(3) == QPoly{2, 2, 1});
  CHECK((QPoly{1, 1} - QPoly{1, 1}).is_zero());
}

TEST_CASE("poly_mul") {
  CHECK(QPoly{1, 1} * QPoly{1} == QPoly{1, 1});
  CHECK(QPoly{1, 1} * QPoly{1, 1, 1} == QPoly{1, 2, 2, 1});
  CHECK((QPoly{1, 1} * QPoly{}).is_zero());
  CHECK((QPoly{} * QPoly{4, 5}).is_zero());
}

TEST_CASE("poly_divexact") {
  CHECK(divexact(QPoly{1, 2, 1}, QPoly{1, 1}) == QPoly{1, 1});
  CHECK(divexact(q_factorial(3), q_integer(2)) == QPoly{1, 1, 1});
  CHECK_THROWS_AS(divexact(QPoly{1, 0, 1}, QPoly{1, 1}), NotDivisible);
  CHECK_THROWS_AS(divexact(QPoly{1, 1}, QPoly{}), DivisionByZero);
  CHECK(divexact(QPoly{}, QPoly{1, 1}).is_zero());
  // leading coefficient must divide
  CHECK_THROWS_AS(divexact(QPoly{1, 1}, QPoly{1, 2}), NotDivisible);
}

TEST_CASE("divexact undoes multiplication") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const QPoly a = random_poly(rng);
    const QPoly b = random_poly(rng);
    CHECK(divexact(a * b, b) == a);
  }
}

TEST_CASE("poly_eval_int") {
  CHECK(eval(QPoly{1, 1, 1}, 1) == 3);
  CHECK(eval(QPoly{1, 1}, -1) == 0);
  CHECK(eval(q_factorial(4), 1) == 24);
  CHECK(eval(QPoly{}, 5) == 0);
}

TEST_CASE("q_integer and q_factorial") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(2) == QPoly{1, 1});
  CHECK(q_integer(4) == QPoly{1, 1, 1, 1});
  CHECK(q_factorial(0) == QPoly{1});
  CHECK(q_factorial(2) == QPoly{1, 1});
  CHECK(q_factorial(3) == QPoly{1, 2, 2, 1});
  for (unsigned n = 0; n <= 12; ++n) {
    Integer fact = 1;
    for (unsigned k = 2; k <= n; ++k) fact *= k;
    CHECK(eval(q_factorial(n), 1) == fact);
  }
}

TEST_CASE("q-factorial coefficients outgrow 64 bits") {
  const QPoly f = q_factorial(30);
  const Integer max = *std::max_element(f.coeffs().begin(), f.coeffs().end());
  CHECK(max > Integer("9223372036854775807"));
  Integer fact = 1;
  for (unsigned k = 2; k <= 30; ++k) fact *= k;
  CHECK(eval(f, 1) == fact);
}

TEST_CASE("q_binomial examples") {
  CHECK(q_binomial(5, 0) == QPoly{1});
  CHECK(q_binomial(2, 1) == QPoly{1, 1});
  CHECK(q_binomial(4, 2) == QPoly{1, 1, 2, 1, 1});
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(3, 4).is_zero());
  CHECK(q_binomial(6, 3) == QPoly{1, 1, 2, 3, 3, 3, 3, 2, 1, 1});
}

TEST_CASE("q_binomial properties for n <= 12") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const QPoly b = q_binomial(n, k);
      CHECK(b == q_binomial(n, n - k));
      CHECK(b.is_palindromic());
      CHECK(eval(b, 1) == pascal(n, k));
      CHECK(b == subset_sum_binomial(n, k));
      if (n <= 10) {
        CHECK(b == divexact(q_factorial(static_cast<std::size_t>(n)),
                            q_factorial(static_cast<std::size_t>(k)) * q_factorial(static_cast<std::size_t>(n - k))));
      }
    }
  }
}

TEST_CASE("q_multinomial") {
  CHECK(q_multinomial({}) == QPoly{1});
  CHECK(q_multinomial({5}) == QPoly{1});
  CHECK(q_multinomial({1, 1}) == q_binomial(2, 1));
  CHECK(q_multinomial({2, 2}) == QPoly{1, 1, 2, 1, 1});
  CHECK(q_multinomial({1, 1, 1}) == q_factorial(3));
  // [a+b+c]! / ([a]![b]![c]!)
  CHECK(q_multinomial({2, 1, 3}) == divexact(q_factorial(6), q_factorial(2) * q_factorial(1) * q_factorial(3)));
}

TEST_CASE("q_multinomial is invariant under permutation of parts") {
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::size_t> parts(len, 0);
    for (;;) {
      std::vector<std::size_t> perm = parts;
      std::sort(perm.begin(), perm.end());
      const QPoly ref = q_multinomial(perm);
      do {
        CHECK(q_multinomial(perm) == ref);
      } while (std::next_permutation(perm.begin(), perm.end()));
      std::size_t i = 0;
      while (i < len && parts[i] == 4) parts[i++] = 0;
      if (i == len) break;
      ++parts[i];
    }
  }
}

TEST_CASE("cyclotomic") {
  CHECK(cyclotomic(1) == QPoly{-1, 1});
  CHECK(cyclotomic(2) == QPoly{1, 1});
  CHECK(cyclotomic(6) == QPoly{1, -1, 1});
  CHECK(cyclotomic(12) == QPoly{1, 0, -1, 0, 1});
  for (std::size_t d = 1; d <= 40; ++d) CHECK(cyclotomic(d).degree() == static_cast<long>(totient(d)));
  CHECK_THROWS_AS(cyclotomic(0), Error);
}

TEST_CASE("cyclotomic_factor") {
  auto f = cyclotomic_factor(QPoly{1, 1});
  CHECK(f.monomial_exponent == 0);
  CHECK(f.factors == std::map<std::size_t, std::size_t>{{2, 1}});
  CHECK(f.remainder == QPoly{1});

  f = cyclotomic_factor(QPoly{0, 1, 1});
  CHECK(f.monomial_exponent == 1);
  CHECK(f.factors == std::map<std::size_t, std::size_t>{{2, 1}});
  CHECK(f.is_cyclotomic_product());

  // [3]_q = Phi_3, whose index exceeds its degree
  f = cyclotomic_factor(q_integer(3));
  CHECK(f.factors == std::map<std::size_t, std::size_t>{{3, 1}});

  const QPoly delayed{1, 2, 1, 1};
  f = cyclotomic_factor(delayed);
  CHECK_FALSE(f.is_cyclotomic_product());
  CHECK(eval(delayed, 1) == 5);

  CHECK_THROWS_AS(cyclotomic_factor(QPoly{}), ZeroInput);
}

TEST_CASE("cyclotomic_factor reassembles its input") {
  std::mt19937_64 rng(11);
  std::vector<QPoly> samples{q_factorial(7), q_binomial(9, 4), QPoly{1, 2, 1, 1}, QPoly{0, 0, 3, 3}};
  for (int i = 0; i < 100; ++i) samples.push_back(random_poly(rng));
  for (const auto& p : samples) {
    if (p.is_zero()) continue;
    CHECK(reassemble(cyclotomic_factor(p)) == p);
  }
  // q-factorials split completely
  const auto f = cyclotomic_factor(q_factorial(6));
  CHECK(f.is_cyclotomic_product());
  CHECK(f.factors.at(2) == 3);  // [2],[4],[6]
}

TEST_CASE("plain rendering") {
  CHECK(to_plain(QPoly{}) == "0");
  CHECK(to_plain(QPoly{1}) == "1");
  CHECK(to_plain(QPoly{1, 2, 2, 1}) == "1 + 2q + 2q^2 + q^3");
  CHECK(to_plain(QPoly{0, 1}) == "q");
  CHECK(to_plain(QPoly{1, -1, 1}) == "1 - q + q^2");
  CHECK(to_plain(QPoly{-1, 1}) == "-1 + q");
  CHECK(to_plain(QPoly{0, -3}) == "-3q");
  CHECK(to_latex(QPoly{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2}) == "2q^{10}");
}
