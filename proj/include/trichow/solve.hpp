#ifndef TRICHOW_SOLVE_HPP
#define TRICHOW_SOLVE_HPP

#include <vector>

#include "trichow/system.hpp"
#include "trichow/triangular.hpp"

namespace trichow {

/// Polynomials in X with coefficients in B[Y] (B = Z or F_p).
template <class B>
using YXPoly = MPoly<MPoly<B>>;

/// Integer generators of the system, as polynomials in X over Z[Y]; each is
/// the primitive integer multiple of the input generator.
std::vector<YXPoly<mpz_class>> integral_generators(const SystemInput& sys);

/// Triangular set of the ideal generated over Frac(B[Y]). Computes the reduced
/// Groebner basis over B[Y, X] for the block order (X in lex, X1 < ... < Xn)
/// >> (Y in grlex); level i is the smallest basis element whose X part of the
/// leading monomial is a power of Xi, divided by its leading coefficient.
/// Tails are therefore reduced only as far as B[Y] allows, not over Frac(B[Y]).
/// Throws NotZeroDim (also for the unit ideal) or NotLazardShape.
template <class B>
TriangularSet<RatFunc<B>> triangularize_generators(const std::vector<YXPoly<B>>& gens);

/// Reduced lex Groebner basis computed directly over Frac(B[Y]) with
/// fraction-free arithmetic in B[Y][X]. Equals reduce_tails of the result of
/// triangularize_generators.
template <class B>
TriangularSet<RatFunc<B>> reduced_lex_basis(const std::vector<YXPoly<B>>& gens);

/// Lazard-shape triangular set of the system over Q(Y).
TriangularSet<QY> triangularize(const SystemInput& sys);

/// Independent elimination for n <= 2: T1 from the squarefree part of
/// resultants, T2 by a Euclidean gcd over K[X1]/(T1). The result is the
/// reduced basis, comparable with reduce_tails(triangularize(sys)).
TriangularSet<QY> eliminate_oracle(const SystemInput& sys);

/// Converts a polynomial in X over B[Y] to one over Frac(B[Y]) divided by `den`.
template <class B>
MPoly<RatFunc<B>> to_ratfunc_poly(const YXPoly<B>& f, const MPoly<B>& den) {
  RatCtx<B> ctx{f.ctx().vars, f.ctx().base};
  std::vector<typename MPoly<RatFunc<B>>::Term> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, RatFunc<B>(c, den));
  return MPoly<RatFunc<B>>::from_terms(f.vars(), ctx, std::move(terms));
}

/// Clears denominators of a polynomial over Frac(B[Y]): returns (P, D) with
/// f = P / D, P with coefficients in B[Y] and D the lcm of the denominators.
template <class B>
std::pair<YXPoly<B>, MPoly<B>> clear_ratfunc(const MPoly<RatFunc<B>>& f) {
  const auto& rctx = f.ctx();
  MPoly<B> den = MPoly<B>::constant(rctx.vars, rctx.base, CoeffOps<B>::one(rctx.base));
  for (const auto& t : f.terms()) den = poly_lcm(den, t.second.den());
  PolyCtx<B> pctx{rctx.vars, rctx.base};
  std::vector<typename YXPoly<B>::Term> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, c.num() * divide_or_throw(den, c.den()));
  return {YXPoly<B>::from_terms(f.vars(), pctx, std::move(terms)), den};
}

}  // namespace trichow

#endif  // TRICHOW_SOLVE_HPP
