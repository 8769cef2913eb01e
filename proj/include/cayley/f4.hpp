#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "cayley/charnum.hpp"
#include "cayley/linalg.hpp"
#include "cayley/multipoly.hpp"
#include "cayley/partition.hpp"
#include "cayley/series.hpp"

namespace cayley {

using RootVector = std::array<Rational, 4>;

/// Root data for the pair Spin(9) < F4, in the standard e-basis, together
/// with the three Weyl coset representatives {1, s4, s4 s3 s4} acting on
/// e_1..e_4 by the printed matrices.
struct RootData {
  static const RootData& instance();

  std::vector<RootVector> spin9_positive;  // 16: e_i and e_i +- e_j
  std::vector<RootVector> complementary;   // 8: (e1 +- e2 +- e3 +- e4)/2
  std::vector<RootVector> f4_positive;     // 24: union of the above
  std::array<RootVector, 4> simple;        // a1..a4
  RootVector a_tilde;                      // e1 + e2 (maximal root)
  RootVector b_tilde;                      // e1 - e2 (derived: 2a4 + 2a3 + a2)
  std::array<Mat, 3> coset;                // identity, s4, s4 s3 s4
  std::array<int, 3> coset_sign;           // sgn of each representative
  std::vector<std::string> evars;          // "e1".."e4"

  /// Image coordinates of a root under a coset matrix.
  static RootVector apply(const Mat& m, const RootVector& r);
  /// The root as a linear polynomial in e1..e4.
  static MultiPoly root_poly(const RootVector& r);
};

/// Generalized Euler classes: the product of the positive roots.
const MultiPoly& euler_class_f4();
const MultiPoly& euler_class_spin9();

/// e_j of the 8 squared complementary roots (the Pontrjagin class p_j of the
/// vertical bundle pulled to the torus), as a polynomial in e1..e4.
const MultiPoly& elementary_in_roots(unsigned j);

/// The s_I class of the vertical bundle on the torus: the monomial symmetric
/// function of the squared complementary roots.
MultiPoly vertical_class_s(const Partition& I);

/// Substitutes p_j -> e_j(r^2) into a polynomial in p1..p8.
MultiPoly vertical_from_p_poly(const MultiPoly& p_poly);

/// Whether P is fixed by the Weyl group of Spin(9): all coordinate
/// permutations and sign flips of e_1..e_4 (checked on generators).
bool check_invariance(const MultiPoly& p);

/// The three coset terms w(P) / prod_i w(r_i) whose sum is the pushforward
/// of the class P of the vertical bundle. Requires check_invariance(p).
std::array<RationalFn, 3> coset_terms(const MultiPoly& p);

inline constexpr uint64_t kDefaultSeed = 2009;

/// Degree-16 classes push to numbers: evaluates the coset-term sum at three
/// independently drawn rational points (all roots nonzero) and requires
/// agreement. Degree below 16 pushes to zero.
Rational pushforward_to_point(const MultiPoly& p, uint64_t seed = kDefaultSeed);

/// All Pontrjagin numbers of the Cayley plane, via pushforward of the
/// elementary monomials in the squared complementary roots.
const CharNumbers& cap2_char_numbers();

/// Pushforward of s_J(eta) restricted to the HP^infinity base line: the
/// number c with image c * u^{|J|-4}; zero for |J| < 4. Computed by the
/// substitution (e1,e2,e3,e4) -> (1, 1+z, z, z) and the pole-cancelling
/// Laurent limit at z = 0.
Rational fiber_pushforward_hp(const Partition& J);

/// Pushforward of s_J(eta) restricted to the product base line: coefficients
/// c_b with image sum_b c_b u1^{|J|-4-b} u2^b. Evaluated along
/// (1, 1+z, t+z, -t+z) at sampled rational t and recovered by exact
/// interpolation in t^2, with an extra sample point checked for agreement.
std::vector<Rational> fiber_pushforward_hp_hp(const Partition& J);

/// s_I(p)[E_n] for the Cayley plane bundle over HP^{n-4}.
Rational s_number_E(unsigned n, const Partition& I);
/// s_I(p)[E'_n] for the Cayley plane bundle over HP^{n-5} x HP^1.
Rational s_number_Eprime(unsigned n, const Partition& I);

CharNumbers full_char_numbers_E(unsigned n);       // 4 <= n <= 8
CharNumbers full_char_numbers_Eprime(unsigned n);  // 6 <= n <= 8

}  // namespace cayley
