#include "plethax/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "plethax/permutation.hpp"
#include "plethax/process.hpp"

namespace plethax {

namespace {
__extension__ typedef unsigned __int128 Uint128;
}  // namespace

bool grevlex_greater(const Exponent& a, const Exponent& b) {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

SparsePolynomial SparsePolynomial::monomial(Exponent e, const Integer& coef) {
  SparsePolynomial p(e.size());
  p.add_term(e, coef);
  return p;
}

SparsePolynomial SparsePolynomial::constant(std::size_t n_vars, const Integer& c) {
  return monomial(Exponent(n_vars, 0), c);
}

SparsePolynomial SparsePolynomial::from_monomial(const Monomial& m, std::size_t n_vars, const Integer& coef) {
  return monomial(m.dense(n_vars), coef);
}

Integer SparsePolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<std::pair<Exponent, Integer>> SparsePolynomial::sorted_terms() const {
  std::vector<std::pair<Exponent, Integer>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return grevlex_greater(a.first, b.first); });
  return out;
}

void SparsePolynomial::check_vars(std::size_t n) const {
  if (n != n_vars_)
    throw std::invalid_argument("polynomials in " + std::to_string(n_vars_) + " and " + std::to_string(n) +
                                " variables");
}

void SparsePolynomial::add_term(const Exponent& e, const Integer& coef) {
  check_vars(e.size());
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coef);
  if (inserted) return;
  it->second += coef;
  if (it->second == 0) terms_.erase(it);
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  check_vars(other.n_vars_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  check_vars(other.n_vars_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  a.check_vars(b.n_vars_);
  SparsePolynomial out(a.n_vars_);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  Exponent e(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

SparsePolynomial add(const SparsePolynomial& a, const SparsePolynomial& b) { return a + b; }
SparsePolynomial sub(const SparsePolynomial& a, const SparsePolynomial& b) { return a - b; }
SparsePolynomial mul(const SparsePolynomial& a, const SparsePolynomial& b) { return a * b; }
SparsePolynomial scale(const SparsePolynomial& a, const Integer& s) { return a * s; }
bool equals(const SparsePolynomial& a, const SparsePolynomial& b) { return a == b; }

SparsePolynomial h_poly(int m, std::size_t n_vars) {
  if (m < 0) throw std::invalid_argument("h_m needs m >= 0");
  SparsePolynomial out(n_vars);
  for (const auto& beta : compositions(static_cast<int>(n_vars), m))
    out.add_term(Exponent(beta.entries().begin(), beta.entries().end()), 1);
  return out;
}

SparsePolynomial p_poly(int r, std::size_t n_vars) {
  if (r < 1) throw std::invalid_argument("p_r needs r >= 1");
  SparsePolynomial out(n_vars);
  for (std::size_t i = 0; i < n_vars; ++i) {
    Exponent e(n_vars, 0);
    e[i] = static_cast<unsigned>(r);
    out.add_term(e, 1);
  }
  return out;
}

SparsePolynomial plethysm_pr(const SparsePolynomial& g, int r) {
  if (r < 1) throw std::invalid_argument("plethysm needs r >= 1");
  SparsePolynomial out(g.n_vars());
  for (const auto& [e, c] : g.terms()) {
    Exponent scaled(e);
    for (auto& x : scaled) x *= static_cast<unsigned>(r);
    out.add_term(scaled, c);
  }
  return out;
}

SparsePolynomial a_beta(std::span<const int> beta, std::size_t max_vars) {
  const std::size_t n = beta.size();
  if (n > max_vars)
    throw BudgetExceeded("symbolic determinant in " + std::to_string(n) + " variables exceeds the limit of " +
                         std::to_string(max_vars));
  for (int b : beta)
    if (b < 0) throw std::invalid_argument("negative exponent in a_beta");
  SparsePolynomial out(n);
  std::vector<int> sorted(beta.begin(), beta.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;

  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Exponent e(n);
  do {
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<unsigned>(beta[static_cast<std::size_t>(perm[i] - 1)]);
    out.add_term(e, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> shifted_exponents(const Partition& lambda, std::size_t n_vars) {
  if (lambda.length() > n_vars)
    throw std::invalid_argument("partition " + lambda.to_string() + " has more than " + std::to_string(n_vars) +
                                " parts");
  std::vector<int> out(n_vars);
  for (std::size_t j = 1; j <= n_vars; ++j) out[j - 1] = lambda.part(j) + static_cast<int>(n_vars - j);
  return out;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const Uint128 prod = static_cast<Uint128>(a) * b;
  // 2^61 ≡ 1 (mod p).
  std::uint64_t lo = static_cast<std::uint64_t>(prod & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  return mod_add(lo, hi);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kPrime;
  while (exp) {
    if (exp & 1) result = mod_mul(result, base);
    base = mod_mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_inv(std::uint64_t a) {
  if (a % kPrime == 0) throw std::domain_error("zero has no inverse mod p");
  return mod_pow(a, kPrime - 2);
}

std::uint64_t residue(const Integer& c) {
  Integer r = c % kPrime;
  if (r < 0) r += kPrime;
  return static_cast<std::uint64_t>(r);
}

EvalPoint EvalPoint::random(std::size_t n_vars, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, kPrime - 1);
  EvalPoint p;
  p.values.resize(n_vars);
  for (auto& v : p.values) v = dist(rng);
  return p;
}

std::uint64_t evaluate(const SparsePolynomial& f, const EvalPoint& point) {
  if (point.values.size() != f.n_vars()) throw std::invalid_argument("evaluation point has the wrong dimension");
  std::uint64_t total = 0;
  for (const auto& [e, c] : f.terms()) {
    std::uint64_t term = residue(c);
    for (std::size_t i = 0; i < e.size() && term != 0; ++i)
      if (e[i]) term = mod_mul(term, mod_pow(point.values[i], e[i]));
    total = mod_add(total, term);
  }
  return total;
}

std::uint64_t a_beta_eval(std::span<const int> beta, const EvalPoint& point) {
  const std::size_t n = beta.size();
  if (point.values.size() != n) throw std::invalid_argument("evaluation point has the wrong dimension");
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (beta[j] < 0) throw std::invalid_argument("negative exponent in a_beta");
      a[i * n + j] = mod_pow(point.values[i], static_cast<std::uint64_t>(beta[j]));
    }

  std::uint64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = mod_sub(0, det);
    }
    const std::uint64_t piv = a[col * n + col];
    det = mod_mul(det, piv);
    const std::uint64_t inv = mod_inv(piv);
    for (std::size_t row = col + 1; row < n; ++row) {
      const std::uint64_t factor = mod_mul(a[row * n + col], inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j)
        a[row * n + j] = mod_sub(a[row * n + j], mod_mul(factor, a[col * n + j]));
    }
  }
  return det;
}

std::uint64_t pr_hm_eval(int r, int m, const EvalPoint& point) {
  if (r < 1 || m < 0) throw std::invalid_argument("pr_hm_eval needs r >= 1 and m >= 0");
  const auto mm = static_cast<std::size_t>(m);
  std::vector<std::uint64_t> h(mm + 1, 0);
  h[0] = 1;
  for (std::uint64_t x : point.values) {
    const std::uint64_t y = mod_pow(x, static_cast<std::uint64_t>(r));
    for (std::size_t k = 1; k <= mm; ++k) h[k] = mod_add(h[k], mod_mul(y, h[k - 1]));
  }
  return h[mm];
}

std::uint64_t schur_eval(const Partition& lambda, const EvalPoint& point) {
  const std::size_t n = point.values.size();
  const std::uint64_t denom = a_beta_eval(shifted_exponents(Partition{}, n), point);
  if (denom == 0) throw std::domain_error("Vandermonde determinant vanishes at this point");
  return mod_mul(a_beta_eval(shifted_exponents(lambda, n), point), mod_inv(denom));
}

}  // namespace plethax
