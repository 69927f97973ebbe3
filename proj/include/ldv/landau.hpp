#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ldv/elimination.hpp"
#include "ldv/lattice.hpp"
#include "ldv/laurent.hpp"
#include "ldv/polytope.hpp"

namespace ldv {

// Inputs of a diagonal computation: the rational function g/f in variables
// `vars`, the diagonal generators (rows of q) and an optional vertex order
// for the series side.
struct DiagonalProblem {
  std::vector<std::string> vars;
  LaurentPolynomial f{1};
  LaurentPolynomial g{1};
  IntegerMatrix q;
  std::optional<ExponentVector> order;

  std::size_t n() const { return vars.size(); }
  std::size_t r() const { return q.rows(); }
  std::size_t s() const { return n() - r(); }

  // Checks arities, Q shape and saturation. Throws InputError.
  void validate() const;
};

// f after z = w^A, with w = (t_1..t_r, u_1..u_s).
struct TransformedProblem {
  IntegerMatrix b;  // columns q_1..q_n
  IntegerMatrix a;  // b^{-1}
  LaurentPolynomial f_tilde{1};
  std::vector<std::string> names;  // t.., u..
  std::size_t r = 0;
  std::size_t s = 0;

  std::vector<std::string> t_names() const;
};

TransformedProblem transform(const DiagonalProblem& problem,
                             CompletionStrategy strategy = CompletionStrategy::kCoordinate);
// With a caller-chosen unimodular b whose first r columns are the rows of Q.
TransformedProblem transform(const DiagonalProblem& problem, const IntegerMatrix& b);

struct NondegeneracyVerdict {
  bool nondegenerate = true;
  std::optional<Face> witness;                 // first failing face of the Newton polytope of f
  std::optional<LaurentPolynomial> truncation;  // f restricted to the witness
  // Basis of the torus-saturated critical ideal on the witness face.
  std::vector<LaurentPolynomial> critical_locus;
};

NondegeneracyVerdict check_nondegenerate(const LaurentPolynomial& f, const EliminationOptions& options = {});

// Face of the Newton polytope of f~ in the u-variables, with its truncation.
struct SigmaFace {
  std::size_t face_id = 0;  // position in u_faces()
  Face face;
  LaurentPolynomial truncation{1};
  bool depends_on_t = false;
};

// All faces of the u-polytope, flagged by t-dependence.
std::vector<SigmaFace> u_faces(const TransformedProblem& tp);
// The t-dependent ones.
std::vector<SigmaFace> sigma_faces(const TransformedProblem& tp);

// Torus discriminant of a face system, as an ideal in t (arity r).
struct Eliminant {
  bool empty = true;                          // no torus solutions
  std::vector<LaurentPolynomial> generators;  // normalized; none means all of the t-torus
};

Eliminant landau_component(const TransformedProblem& tp, const SigmaFace& sigma,
                           const EliminationOptions& options = {});

// The same set from the rank condition on the matrix built from the
// log-gradient of f_delta and Q, for a face delta of the Newton polytope of f.
Eliminant landau_direct(const DiagonalProblem& problem, const Face& delta, const EliminationOptions& options = {});

struct LandauOptions {
  EliminationOptions elimination;
  bool skip_nondegeneracy = false;
  CompletionStrategy completion = CompletionStrategy::kCoordinate;
  std::optional<IntegerMatrix> basis;  // overrides `completion`
  bool parallel = true;
};

struct LandauEntry {
  SigmaFace sigma;
  Eliminant eliminant;
};

struct LandauReport {
  TransformedProblem transformed;
  std::optional<NondegeneracyVerdict> nondegeneracy;  // absent when the check was skipped
  std::vector<LandauEntry> entries;                   // Sigma, by face id
  std::vector<std::vector<LaurentPolynomial>> components;  // nonempty eliminants

  bool degenerate() const { return nondegeneracy && !nondegeneracy->nondegenerate; }
};

// Runs the nondegeneracy check (unless skipped); on a degenerate f the
// report carries the verdict and no entries.
LandauReport landau_variety(const DiagonalProblem& problem, const LandauOptions& options = {});

// True when both describe the same subset of the t-torus, checked by mutual
// ideal membership.
bool same_zero_set(const Eliminant& a, const Eliminant& b, std::size_t r, const EliminationOptions& options = {});

// Union of the report's components as a single ideal (product), or an empty
// eliminant.
Eliminant union_ideal(const LandauReport& report, const EliminationOptions& options = {});

// Face delta of the Newton polytope of f paired with the u-face whose
// preimage it is, when one exists.
struct CrosscheckEntry {
  std::size_t delta_id = 0;
  Face delta;
  std::optional<std::size_t> sigma_id;
  Eliminant direct;
  std::optional<Eliminant> component;
  bool agree = true;  // vacuous without a counterpart
};

std::vector<CrosscheckEntry> crosscheck(const DiagonalProblem& problem, const LandauOptions& options = {});

// Real roots of a univariate polynomial in (0, inf), ascending.
std::vector<double> positive_real_roots(const LaurentPolynomial& p);

}  // namespace ldv
