#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cayley/linalg.hpp"
#include "cayley/multipoly.hpp"
#include "cayley/partition.hpp"

namespace cayley {

/// Monomial symmetric function m_I evaluated at the given arguments:
/// the sum over distinct assignments of the parts of I to distinct
/// argument positions. Requires at least as many arguments as parts.
MultiPoly monomial_symmetric(const Partition& I, std::span<const MultiPoly> args);

/// A symmetric function of weight n written on the basis of monomials
/// e_J = prod_j e_{J_j} in the elementary symmetric functions, indexed by
/// partitions J of n.
using ElementaryCombo = std::map<Partition, Rational>;

/// Change-of-basis tables between the monomial symmetric functions
/// {m_I : |I| = n} and the elementary monomials {e_J : |J| = n}. The two
/// matrices are mutually inverse; rows/columns are indexed by
/// partitions_of(n) in its order.
struct SymTables {
  unsigned n = 0;
  std::vector<Partition> parts;
  Mat e_in_m;  // row J: coefficients of e_J on the m_I basis
  Mat m_in_e;  // row I: coefficients of m_I on the e_J basis
};

const SymTables& elementary_to_monomial(unsigned n);

/// Power sum p_r on the elementary basis (Newton's identities). Memoized.
const ElementaryCombo& powersum_in_elementary(unsigned r);

/// Product of power sums prod_i p_{lambda_i} on the elementary basis.
/// Memoized.
const ElementaryCombo& powersum_monomial_in_elementary(const Partition& lambda);

/// Product of two elementary-basis combos (e_J * e_K = e_{J u K}).
ElementaryCombo combo_mul(const ElementaryCombo& a, const ElementaryCombo& b);

/// m_I on the elementary basis, via the tables.
ElementaryCombo monomial_in_elementary(const Partition& I);

/// Linear change of variables: var_i -> sum_j m[j][i] * var_j over the given
/// ordered variable list; a ring homomorphism. The matrix must be square of
/// the list's dimension, and p may use only listed variables.
MultiPoly apply_linear(const Mat& m, const std::vector<std::string>& vars, const MultiPoly& p);

}  // namespace cayley
