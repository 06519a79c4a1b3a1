#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "isotropy/exact.hpp"
#include "isotropy/partition.hpp"
#include "isotropy/tableau.hpp"

namespace isotropy {

inline constexpr int kMaxVariables = 16;

/// Dense exponent vector x_1^e_1 ... x_k^e_k; unused slots stay zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  int operator[](int var) const noexcept { return exp_[static_cast<std::size_t>(var)]; }
  void raise(int var, int by = 1);
  int degree() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Sparse polynomial in a fixed number of variables with exact integer
/// coefficients. Zero coefficients are never stored.
class SymPoly {
 public:
  using TermMap = std::map<Monomial, ExactInt>;

  explicit SymPoly(int num_vars);

  static SymPoly constant(int num_vars, const ExactInt& value);
  static SymPoly variable(int num_vars, int var);
  /// sum_i coeffs[i] * x_{i+1}
  static SymPoly linear_form(std::span<const int> coeffs);

  int num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  ExactInt coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const ExactInt& coeff);

  /// Total degree if every term has the same degree; nullopt for the zero
  /// polynomial or a mixed-degree one.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;

  /// Invariance under a transposition and a full cycle, which generate S_k.
  bool is_symmetric() const;

  /// Substitutes x_i -> x_{perm[i]} (0-based).
  SymPoly permuted(std::span<const int> perm) const;

  /// Product with sum_i coeffs[i] x_i. Terms where some exponent would exceed
  /// exponent_cap are dropped.
  SymPoly times_linear_form(std::span<const int> coeffs,
                            int exponent_cap = std::numeric_limits<std::uint16_t>::max()) const;

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  int num_vars_;
  TermMap terms_;
};

/// f = sum_mu coeff[mu] * s_mu(x_1..x_k), with mu ranging over partitions of
/// length <= k. Iterates in lexicographic order of mu.
struct SchurExpansion {
  int num_vars = 0;
  std::map<Partition, ExactInt> coefficients;

  bool is_zero() const noexcept { return coefficients.empty(); }
  /// sum_mu coeff[mu] * s_mu(1^k), using the hook-content dimension.
  ExactInt evaluate_at_ones() const;
};

struct ProductLimits {
  std::size_t max_terms = 5'000'000;
};

/// Number of degree-d monomials in k variables, C(d + k - 1, k - 1).
ExactInt monomial_count(int degree, int num_vars);

/// prod over weights of (sum_i w[i] x_i). The empty product is 1. Throws
/// DegreeGuard when the worst-case term count exceeds limits.max_terms.
SymPoly product_of_linear_forms(std::span<const WeightVector> weights, int num_vars,
                                const ProductLimits& limits = {});

/// prod_{i<j} (x_i - x_j).
SymPoly vandermonde(int num_vars);

/// Schur polynomial s_lambda(x_1..x_k) as the sum of x^T over SSYT T.
SymPoly schur_polynomial(const Partition& lambda, int num_vars);

/// Expansion of a symmetric homogeneous polynomial in the Schur basis: the
/// coefficient of s_mu is the coefficient of x^(mu + delta) in f * vandermonde,
/// delta = (k-1, ..., 1, 0). Throws NotHomogeneous or NotSymmetric.
SchurExpansion schur_expand(const SymPoly& f);

ExactInt evaluate_at_ones(const SymPoly& f);

/// Reads Schur coefficients off an alternant: every term with strictly
/// decreasing exponents e contributes to mu = e - delta.
SchurExpansion read_alternant(const SymPoly& alternant);

}  // namespace isotropy
