#include "isotropy/sympoly.hpp"

#include <numeric>
#include <unordered_map>

#include "isotropy/errors.hpp"
#include "isotropy/schur_eval.hpp"

namespace isotropy {

namespace {

constexpr int kExponentLimit = std::numeric_limits<std::uint16_t>::max();

void check_num_vars(int num_vars) {
  if (num_vars < 0 || num_vars > kMaxVariables) {
    throw Error(ErrorCode::kInvalidRange, "number of variables must lie in [0, " +
                                              std::to_string(kMaxVariables) + "], got " +
                                              std::to_string(num_vars));
  }
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  check_num_vars(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kExponentLimit) {
      throw Error(ErrorCode::kInvalidRange, "exponent out of range: " + std::to_string(exponents[i]));
    }
    exp_[i] = static_cast<std::uint16_t>(exponents[i]);
  }
}

void Monomial::raise(int var, int by) {
  auto& e = exp_[static_cast<std::size_t>(var)];
  if (static_cast<int>(e) + by > kExponentLimit) {
    throw Error(ErrorCode::kDegreeGuard, "exponent of x_" + std::to_string(var + 1) +
                                             " would exceed " + std::to_string(kExponentLimit));
  }
  e = static_cast<std::uint16_t>(e + by);
}

int Monomial::degree() const noexcept {
  return std::accumulate(exp_.begin(), exp_.end(), 0);
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

SymPoly::SymPoly(int num_vars) : num_vars_(num_vars) { check_num_vars(num_vars); }

SymPoly SymPoly::constant(int num_vars, const ExactInt& value) {
  SymPoly p(num_vars);
  p.add_term(Monomial(), value);
  return p;
}

SymPoly SymPoly::variable(int num_vars, int var) {
  if (var < 0 || var >= num_vars) {
    throw Error(ErrorCode::kInvalidRange, "variable index " + std::to_string(var) +
                                              " out of range for " + std::to_string(num_vars) +
                                              " variables");
  }
  SymPoly p(num_vars);
  Monomial m;
  m.raise(var);
  p.add_term(m, 1);
  return p;
}

SymPoly SymPoly::linear_form(std::span<const int> coeffs) {
  SymPoly p(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m;
    m.raise(static_cast<int>(i));
    p.add_term(m, coeffs[i]);
  }
  return p;
}

ExactInt SymPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactInt(0) : it->second;
}

void SymPoly::add_term(const Monomial& m, const ExactInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> SymPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

bool SymPoly::is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

SymPoly SymPoly::permuted(std::span<const int> perm) const {
  SymPoly out(num_vars_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> exps(static_cast<std::size_t>(num_vars_), 0);
    for (int i = 0; i < num_vars_; ++i) exps[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = m[i];
    out.add_term(Monomial(exps), c);
  }
  return out;
}

bool SymPoly::is_symmetric() const {
  if (num_vars_ < 2) return true;
  std::vector<int> swap(static_cast<std::size_t>(num_vars_));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  if (permuted(swap) != *this) return false;
  std::vector<int> cycle(static_cast<std::size_t>(num_vars_));
  for (int i = 0; i < num_vars_; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % num_vars_;
  return permuted(cycle) == *this;
}

SymPoly SymPoly::times_linear_form(std::span<const int> coeffs, int exponent_cap) const {
  if (static_cast<int>(coeffs.size()) != num_vars_) {
    throw Error(ErrorCode::kInvalidRange, "linear form has " + std::to_string(coeffs.size()) +
                                              " coefficients for " + std::to_string(num_vars_) +
                                              " variables");
  }
  std::unordered_map<Monomial, ExactInt, MonomialHash> acc;
  acc.reserve(terms_.size() * 2);
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < num_vars_; ++i) {
      const int a = coeffs[static_cast<std::size_t>(i)];
      if (a == 0 || m[i] >= exponent_cap) continue;
      Monomial next = m;
      next.raise(i);
      auto [it, inserted] = acc.try_emplace(next);
      if (a == 1) {
        it->second += c;
      } else if (a > 0) {
        mpz_addmul_ui(it->second.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(a));
      } else {
        mpz_submul_ui(it->second.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-static_cast<long>(a)));
      }
    }
  }
  SymPoly out(num_vars_);
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.emplace(m, std::move(c));
  }
  return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.num_vars_ != b.num_vars_) {
    throw Error(ErrorCode::kInvalidRange, "variable count mismatch in product");
  }
  SymPoly out(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (int i = 0; i < a.num_vars_; ++i) {
        if (mb[i] != 0) m.raise(i, mb[i]);
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

ExactInt SchurExpansion::evaluate_at_ones() const {
  ExactInt total = 0;
  for (const auto& [mu, c] : coefficients) total += c * schur_ones_hook_content(mu, num_vars);
  return total;
}

ExactInt monomial_count(int degree, int num_vars) {
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  return binomial(degree + num_vars - 1, num_vars - 1);
}

SymPoly product_of_linear_forms(std::span<const WeightVector> weights, int num_vars,
                                const ProductLimits& limits) {
  const int degree = static_cast<int>(weights.size());
  const ExactInt worst = monomial_count(degree, num_vars);
  if (worst > ExactInt(std::to_string(limits.max_terms))) {
    throw Error(ErrorCode::kDegreeGuard,
                "a degree-" + std::to_string(degree) + " product in " + std::to_string(num_vars) +
                    " variables may hold " + to_decimal(worst) + " terms, over the cap of " +
                    std::to_string(limits.max_terms));
  }
  SymPoly product = SymPoly::constant(num_vars, 1);
  for (const auto& w : weights) {
    if (static_cast<int>(w.counts.size()) != num_vars) {
      throw Error(ErrorCode::kInvalidRange, "weight vector length " +
                                                std::to_string(w.counts.size()) + " != " +
                                                std::to_string(num_vars));
    }
    product = product.times_linear_form(w.counts);
  }
  return product;
}

SymPoly vandermonde(int num_vars) {
  SymPoly v = SymPoly::constant(num_vars, 1);
  std::vector<int> form(static_cast<std::size_t>(num_vars), 0);
  for (int i = 0; i < num_vars; ++i) {
    for (int j = i + 1; j < num_vars; ++j) {
      form[static_cast<std::size_t>(i)] = 1;
      form[static_cast<std::size_t>(j)] = -1;
      v = v.times_linear_form(form);
      form[static_cast<std::size_t>(i)] = 0;
      form[static_cast<std::size_t>(j)] = 0;
    }
  }
  return v;
}

SymPoly schur_polynomial(const Partition& lambda, int num_vars) {
  SymPoly s(num_vars);
  for (const auto& w : weight_vectors(lambda, num_vars)) s.add_term(Monomial(w.counts), 1);
  return s;
}

SchurExpansion read_alternant(const SymPoly& alternant) {
  const int k = alternant.num_vars();
  SchurExpansion out{k, {}};
  for (const auto& [m, c] : alternant.terms()) {
    bool strictly_decreasing = true;
    for (int i = 0; i + 1 < k; ++i) {
      if (m[i] <= m[i + 1]) {
        strictly_decreasing = false;
        break;
      }
    }
    if (!strictly_decreasing) continue;
    std::vector<int> parts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = m[i] - (k - 1 - i);
    out.coefficients.emplace(Partition(std::move(parts)), c);
  }
  return out;
}

SchurExpansion schur_expand(const SymPoly& f) {
  if (!f.is_homogeneous()) {
    throw Error(ErrorCode::kNotHomogeneous, "Schur expansion needs a homogeneous polynomial");
  }
  if (!f.is_symmetric()) {
    throw Error(ErrorCode::kNotSymmetric,
                "coefficients change under a permutation of the variables");
  }
  if (f.is_zero()) return SchurExpansion{f.num_vars(), {}};
  return read_alternant(f * vandermonde(f.num_vars()));
}

ExactInt evaluate_at_ones(const SymPoly& f) {
  ExactInt total = 0;
  for (const auto& [m, c] : f.terms()) total += c;
  return total;
}

}  // namespace isotropy
