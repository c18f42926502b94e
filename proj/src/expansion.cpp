#include "plethax/expansion.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace plethax {

SchurExpansion::SchurExpansion(std::initializer_list<std::pair<Partition, int>> terms) {
  for (const auto& [lambda, c] : terms) add(lambda, c);
}

void SchurExpansion::add(const Partition& lambda, const Integer& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coef);
  if (inserted) return;
  it->second += coef;
  if (it->second == 0) terms_.erase(it);
}

Integer SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

SchurExpansion pmn_expand(const Partition& mu, int r, int m) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  SchurExpansion out;
  for (const auto& [lambda, sign] : enumerate_supersets(mu, r, m)) out.add(lambda, sign);
  return out;
}

std::vector<PlethysmFactor> plethysm_factors(const Partition& rho, const Partition& nu) {
  std::vector<PlethysmFactor> out;
  for (int r : rho.parts())
    for (int m : nu.parts()) out.push_back({r, m});
  return out;
}

SchurExpansion pmn_expand_factors(const Partition& mu, std::span<const PlethysmFactor> factors) {
  SchurExpansion current{{mu, 1}};
  for (const auto& f : factors) {
    SchurExpansion next;
    for (const auto& [gamma, c] : current.terms())
      for (const auto& [lambda, sign] : enumerate_supersets(gamma, f.r, f.m)) next.add(lambda, c * sign);
    current = std::move(next);
  }
  return current;
}

SchurExpansion pmn_expand_iterated(const Partition& mu, const Partition& rho, const Partition& nu) {
  if (rho.empty() || nu.empty()) throw std::invalid_argument("rho and nu must be non-empty partitions");
  const auto factors = plethysm_factors(rho, nu);
  return pmn_expand_factors(mu, factors);
}

std::size_t default_variable_count(const Partition& mu, int r, int m) {
  return static_cast<std::size_t>(mu.size() + r * m);
}

namespace {

std::string describe_term(const Exponent& e, const Integer& lhs, const Integer& rhs) {
  std::ostringstream os;
  os << "x^(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << "): lhs " << lhs << ", rhs " << rhs;
  return os.str();
}

std::string describe_point(std::size_t index, std::uint64_t lhs, std::uint64_t rhs, const char* form) {
  std::ostringstream os;
  os << form << " form differs at point " << index << ": lhs " << lhs << ", rhs " << rhs;
  return os.str();
}

}  // namespace

OracleReport verify_against_oracle(const Partition& mu, int r, int m, std::size_t n_vars, OracleMode mode,
                                   std::uint64_t seed, std::size_t points) {
  if (r < 1 || m < 0) throw std::invalid_argument("need r >= 1 and m >= 0");
  const std::size_t bound = default_variable_count(mu, r, m);
  if (n_vars < bound)
    throw std::invalid_argument("N = " + std::to_string(n_vars) + " is below |mu| + r*m = " + std::to_string(bound));

  const SchurExpansion expansion = pmn_expand(mu, r, m);
  OracleReport report;
  report.mode = mode;
  report.n_vars = n_vars;
  report.seed = seed;
  report.expansion_terms = expansion.size();

  if (mode == OracleMode::symbolic) {
    const SparsePolynomial lhs = a_beta(shifted_exponents(mu, n_vars)) * plethysm_pr(h_poly(m, n_vars), r);
    SparsePolynomial rhs(n_vars);
    for (const auto& [lambda, c] : expansion.terms()) {
      const SparsePolynomial a = a_beta(shifted_exponents(lambda, n_vars));
      for (const auto& [e, sign] : a.terms()) rhs.add_term(e, sign * c);
    }
    report.checks = lhs.term_count();
    report.pass = lhs == rhs;
    if (!report.pass) {
      const auto& e = (lhs - rhs).sorted_terms().front().first;
      report.first_discrepancy = describe_term(e, lhs.coefficient(e), rhs.coefficient(e));
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  const auto mu_exp = shifted_exponents(mu, n_vars);
  const auto delta = shifted_exponents(Partition{}, n_vars);
  report.pass = true;
  for (std::size_t k = 0; k < points; ++k) {
    const EvalPoint point = EvalPoint::random(n_vars, rng);
    ++report.checks;
    const std::uint64_t plethysm = pr_hm_eval(r, m, point);
    const std::uint64_t lhs = mod_mul(a_beta_eval(mu_exp, point), plethysm);
    std::uint64_t rhs = 0;
    std::vector<std::uint64_t> alternants;
    for (const auto& [lambda, c] : expansion.terms()) {
      alternants.push_back(a_beta_eval(shifted_exponents(lambda, n_vars), point));
      rhs = mod_add(rhs, mod_mul(residue(c), alternants.back()));
    }
    if (lhs != rhs) {
      report.pass = false;
      report.first_discrepancy = describe_point(k, lhs, rhs, "alternant");
      break;
    }
    const std::uint64_t vandermonde = a_beta_eval(delta, point);
    if (vandermonde == 0) continue;
    const std::uint64_t inv = mod_inv(vandermonde);
    const std::uint64_t schur_lhs = mod_mul(mod_mul(a_beta_eval(mu_exp, point), inv), plethysm);
    std::uint64_t schur_rhs = 0;
    std::size_t idx = 0;
    for (const auto& [lambda, c] : expansion.terms())
      schur_rhs = mod_add(schur_rhs, mod_mul(residue(c), mod_mul(alternants[idx++], inv)));
    if (schur_lhs != schur_rhs) {
      report.pass = false;
      report.first_discrepancy = describe_point(k, schur_lhs, schur_rhs, "Schur");
      break;
    }
  }
  return report;
}

namespace {

Monomial weight_r(const LabelledAbacus& w, const Composition& beta, int r) {
  Monomial mono = weight(w);
  for (int b = 1; b <= static_cast<int>(beta.length()); ++b)
    mono.multiply(b, static_cast<long long>(r) * beta[b]);
  return mono;
}

std::string describe_pair(const LabelledAbacus& w, const Composition& beta) {
  return "(" + to_pairs_string(w) + "; " + beta.to_string() + ")";
}

}  // namespace

ProcessReport verify_process_identity(const Partition& mu, int r, int m, int n_beads, std::uint64_t budget) {
  if (r < 1 || m < 0) throw std::invalid_argument("need r >= 1 and m >= 0");
  if (n_beads < 1 || mu.length() > static_cast<std::size_t>(n_beads))
    throw std::invalid_argument("need at least ell(mu) >= 1 beads");
  const auto n = static_cast<std::size_t>(n_beads);
  const auto pairs = enumerate_pairs(mu, n_beads, r, m, budget);

  ProcessReport report;
  auto fail = [&](std::string why) {
    if (report.first_failure.empty()) report.first_failure = std::move(why);
  };

  SparsePolynomial unsuccessful_sum(n);
  SparsePolynomial successful_sum(n);
  std::set<LabelledAbacus> images;

  for (const auto& pair : pairs) {
    const Monomial wt = weight_r(pair.abacus, pair.beta, r);
    if (!pair.successful()) {
      ++report.unsuccessful;
      unsuccessful_sum.add_term(wt.dense(n), pair.abacus.sign());
      const auto [w2, beta2] = epsilon(pair.abacus, pair.beta, r);
      if (run_process(w2, beta2, r, TraceDetail::moves_only).successful())
        fail("epsilon image is successful for " + describe_pair(pair.abacus, pair.beta));
      else if (epsilon(w2, beta2, r) != std::pair{pair.abacus, pair.beta})
        fail("epsilon is not an involution at " + describe_pair(pair.abacus, pair.beta));
      if (w2.sign() != -pair.abacus.sign()) fail("epsilon keeps the sign at " + describe_pair(pair.abacus, pair.beta));
      if (weight_r(w2, beta2, r) != wt) fail("epsilon changes the weight at " + describe_pair(pair.abacus, pair.beta));
      continue;
    }
    ++report.successful;
    successful_sum.add_term(wt.dense(n), pair.abacus.sign());
    const auto& image = std::get<Successful>(pair.outcome).final_abacus;
    const Partition lambda = shape(image);
    const int sg = lambda.contains(mu) ? sgn_r(SkewPartition(lambda, mu), r) : 0;
    if (sg == 0) fail("psi lands outside the r-decomposable shapes at " + describe_pair(pair.abacus, pair.beta));
    if (image.sign() != sg * pair.abacus.sign())
      fail("sign law fails at " + describe_pair(pair.abacus, pair.beta));
    if (weight(image) != wt) fail("psi changes the weight at " + describe_pair(pair.abacus, pair.beta));
    if (!images.insert(image).second) fail("psi is not injective at " + describe_pair(pair.abacus, pair.beta));
  }

  if (!unsuccessful_sum.is_zero()) fail("unsuccessful pairs do not cancel");

  SparsePolynomial target_sum(n);
  std::size_t targets = 0;
  for (const auto& [lambda, sg] : enumerate_supersets(mu, r, m)) {
    if (lambda.length() > n) continue;
    for (const auto& w : all_abaci(lambda, n_beads, n_beads)) {
      ++targets;
      if (!images.contains(w)) fail("psi misses " + to_pairs_string(w));
      target_sum.add_term(weight(w).dense(n), sg * w.sign());
    }
  }
  report.target_abaci = targets;
  if (targets != images.size()) fail("psi image has the wrong size");
  if (successful_sum != target_sum) fail("successful pairs do not regroup into the expansion");
  if (report.unsuccessful + report.successful != pairs.size()) fail("pair count mismatch");

  report.pass = report.first_failure.empty();
  return report;
}

}  // namespace plethax
