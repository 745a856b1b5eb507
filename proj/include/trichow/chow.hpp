#ifndef TRICHOW_CHOW_HPP
#define TRICHOW_CHOW_HPP

#include <string>
#include <vector>

#include "trichow/solve.hpp"

namespace trichow {

enum class ChowFlavor { Monic, Primitive };

/// Chow form of a zero-dimensional set over Q(Y): a U-homogeneous polynomial
/// of degree `degree` in U0..Un.
struct ChowForm0 {
  ChowFlavor flavor = ChowFlavor::Monic;
  unsigned long degree = 0;
  VarSet uvars;                 // U0..Un
  MPoly<QY> monic;              // Monic: coefficients in Q(Y), U0^degree has coefficient 1
  MPoly<mpz_class> primitive;   // Primitive: over Y1..Ym, U0..Un, content 1
  MPoly<mpz_class> leading;     // Primitive: a_n, the coefficient of U0^degree, over Y
};

/// U0, ..., Un.
VarSet chow_vars(std::size_t n);

/// det(U0 Id + U1 M1 + ... + Un Mn) with Mi the matrix of multiplication by Xi
/// on the quotient basis, i.e. prod over the points x of (U0 + sum Ui xi).
/// Throws NonRadical when some iterated resultant e_i vanishes.
ChowForm0 monic_chow(const TriangularSet<QY>& t);

/// Clears denominators of a monic form, removes the content in Z[Y] and fixes
/// the sign so that a_n has a positive leading coefficient in grlex.
ChowForm0 primitive_chow(const ChowForm0& monic);

/// Substitutes U0 <- -(U1 X1 + ... + Un Xn) into the monic form and reduces
/// modulo t; zero for a Chow form of the set defined by t.
MPoly<QY> chow_root_residual(const ChowForm0& monic, const TriangularSet<QY>& t);

/// G_n = 1 + 2 sum_{i<n} (d_i - 1).
unsigned long denominator_exponent(const std::vector<Monomial::Exp>& degrees);

struct DenominatorReport {
  unsigned long g = 0;
  unsigned long degree_bound = 0;   // supplied bound on d_V
  bool an_n_integral = false;       // a_n N_n in Z[Y, X]
  long an_n_degree = 0;             // deg(a_n N_n, Y)
  bool scaled_integral = false;     // a_n^G T~_n in Z[Y, X]
  long scaled_degree = 0;           // deg(a_n^G T~_n, Y)
  std::string witness;              // first offending coefficient, if any
  bool pass() const {
    return an_n_integral && scaled_integral && an_n_degree <= static_cast<long>(degree_bound) &&
           scaled_degree <= static_cast<long>(g * degree_bound);
  }
};

/// Checks that a_n N_n and a_n^{G_n} T~_n have coefficients in Z[Y] and
/// Y-degrees at most d_V and G_n d_V, with d_V replaced by `degree_bound`.
/// N_n comes from the regular chain of t and T~_n from the iterated
/// resultants of the reduced basis reduce_tails(t).
DenominatorReport denominator_check(const TriangularSet<QY>& t, const MPoly<mpz_class>& a_n,
                                    unsigned long degree_bound);

/// Chow form of an (m)-dimensional set in (m+n)-space: m+1 groups of m+n+1
/// variables U<i>_<j>, homogeneous of the same degree in each group.
struct MultiChow {
  unsigned m = 0, n = 0;
  MPoly<mpz_class> body;

  /// Validates the variable list and multi-homogeneity; throws Structural.
  MultiChow(unsigned m, unsigned n, MPoly<mpz_class> body);
};

/// U0_0, ..., U0_{m+n}, U1_0, ..., Um_{m+n}.
VarSet multichow_vars(unsigned m, unsigned n);

/// Text format: a header line "groups <m+1> arity <m+n+1>" followed by the
/// polynomial in the variables U<i>_<j>.
MultiChow parse_multichow(std::string_view text);
std::string print_multichow(const MultiChow& c);

/// U_(0) <- (U0, Y1..Ym), U_(Y) <- [0; -Id], U_(X) <- [U1..Un; 0]. The result,
/// over Y1..Ym, U0..Un, may be zero or degenerate when the projection is not
/// finite.
MPoly<mpz_class> substitute_kps(const MultiChow& c);

/// True for the zero polynomial or when the coefficient of the top power of U0
/// vanishes, so that the polynomial is not a Chow form of a finite set.
bool is_degenerate_chow(const MPoly<mpz_class>& f, std::size_t n);

struct EpsilonSubstitution {
  MPoly<mpz_class> c_eps;  // over Y, U0..Un, U<i>_<m+j> (i >= 1), eps
  MPoly<mpz_class> c0;     // lowest coefficient in eps, same variables without eps
  unsigned valuation = 0;
};

/// As substitute_kps, but row i >= 1 of U_(X) becomes eps * (Ui_{m+1} ..
/// Ui_{m+n}). Throws ContradictsTheorem when a nonzero input collapses to 0.
EpsilonSubstitution substitute_epsilon(const MultiChow& c);

/// Exact divisibility of f by the primitive Chow form, both seen over the
/// variables of f.
bool chow_divides(const ChowForm0& primitive, const MPoly<mpz_class>& f);

}  // namespace trichow

#endif  // TRICHOW_CHOW_HPP
