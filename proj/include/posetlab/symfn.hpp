#pragma once

#include "posetlab/kocay.hpp"
#include "posetlab/lattice.hpp"

namespace posetlab {

// Chromatic symmetric function stored as the coefficient of the single
// monomial x_1^{l1} ... x_l^{ll} for each partition (l1 >= ... >= ll).
struct MonomialSymFn {
  int degree = 0;
  std::map<IntPartition, long long> coeffs;
  long long coeff(const IntPartition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? 0 : it->second;
  }
  bool operator==(const MonomialSymFn&) const = default;
};

// Colourings weighted by (1+t)^{bad edges}: coefficient of
// (1+t)^j x_1^{l1}...x_l^{ll} keyed by (partition, j).
struct TutteSymFn {
  int degree = 0;
  std::map<std::pair<IntPartition, int>, long long> coeffs;
  bool operator==(const TutteSymFn&) const = default;
};

struct PowerSumExpansion {
  int degree = 0;
  std::map<IntPartition, long long> coeffs;
};

struct IntPolynomial {
  std::vector<long long> c;  // c[i] is the coefficient of k^i
  long long eval(long long x) const {
    long long r = 0;
    for (size_t i = c.size(); i-- > 0;) r = checked_add(checked_mul(r, x), c[i]);
    return r;
  }
  bool operator==(const IntPolynomial&) const = default;
};

MonomialSymFn xg_direct(const Graph& g);
MonomialSymFn xg_from_poset(const LabeledPoset& p);
TutteSymFn xgt_direct(const Graph& g);
TutteSymFn xgt_from_poset(const LabeledPoset& p);

// Stanley's lattice expansion: sum of count-to-top * mu * p_lambda, converted
// to monomial form. Needs partition types and the mobius values.
MonomialSymFn xg_from_lattice(const FoldedLattice& l, const std::vector<long long>& mobius);

// Coefficient of the canonical monomial of lambda in p_{lambda'};
// the number of part-to-slot assignments with matching slot sums.
long long power_monomial_coefficient(const IntPartition& lambda_prime, const IntPartition& lambda);

MonomialSymFn power_to_monomial(const PowerSumExpansion& e);

// Exact chromatic polynomial recovered from the chromatic symmetric function.
IntPolynomial chromatic_polynomial(const MonomialSymFn& x);

// The (1+t)-basis Tutte form restricted to j == 0 (the t = -1 slice).
MonomialSymFn tutte_chromatic_slice(const TutteSymFn& t);

}  // namespace posetlab
