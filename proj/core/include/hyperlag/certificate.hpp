#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hyperlag/bigfloat.hpp"
#include "hyperlag/int_polynomial.hpp"
#include "hyperlag/tower.hpp"

namespace hyperlag {

// Congruence conditions on the b-sequence of p_k:
//   (i)  3 | b_{k,i}  iff  i != 2^k
//   (ii) 9 does not divide b_{k,0}
struct DivisibilityReport {
  int k = 0;
  bool b_sequence_checked = false;
  bool cond_i_holds = false;
  bool cond_ii_holds = false;
  std::vector<std::size_t> failing_indices;  // indices violating (i)
  std::size_t indices_examined = 0;

  bool passed() const noexcept { return b_sequence_checked && cond_i_holds && cond_ii_holds; }
};

DivisibilityReport check_divisibility(int k, const IntPolynomial& pk);
DivisibilityReport check_divisibility(int k, int cap = kDefaultTowerCap);

enum class EisensteinOrientation {
  NotApplicable,
  ExceptionAtLeading,   // q divides every coefficient but the leading one
  ExceptionAtConstant,  // q divides every coefficient but the constant one
};

const char* to_string(EisensteinOrientation o) noexcept;

struct EisensteinWitness {
  bool passed = false;
  EisensteinOrientation orientation = EisensteinOrientation::NotApplicable;
  unsigned long prime = 0;
  mpz_class leading_mod_q2;   // in [0, q^2)
  mpz_class constant_mod_q2;  // in [0, q^2)
};

// Eisenstein's criterion at q, accepted in either orientation. Throws
// InputError if q is not prime or the polynomial is constant.
EisensteinWitness eisenstein_check(const IntPolynomial& poly, unsigned long q);

// Rigorous upper bound on |poly(value)|, treating value as an exact dyadic
// rational. Horner's rule runs twice, once rounding down and once rounding up,
// at precision_bits plus headroom for the coefficient sizes.
// Requires 0 < value < 1.
BigFloat verify_root(const IntPolynomial& poly, const BigFloat& value, long precision_bits);

struct DegreeCertificate {
  int k = 0;
  IntPolynomial polynomial;
  std::size_t claimed_degree = 0;
  long precision_bits = 0;
  BigFloat root;
  BigFloat residual_bound;
  BigFloat tolerance;
  unsigned long eisenstein_prime = 3;
  EisensteinWitness eisenstein;
  DivisibilityReport divisibility;
  bool valid = false;
  std::vector<std::string> failures;  // empty iff valid
};

// Residual tolerance 2^(-precision/2).
BigFloat default_residual_tolerance(long precision_bits);

DegreeCertificate degree_certificate(int k, long precision_bits, int cap = kDefaultTowerCap);
DegreeCertificate degree_certificate(int k, const IntPolynomial& pk, long precision_bits);

}  // namespace hyperlag
