// Graded tensor calculus on SuperMatrix: sign-correct tensor products,
// placement of operators into multi-factor spaces, the superpermutation, and
// (partial) supertraces.
#pragma once

#include <cstddef>
#include <vector>

#include "supercas/supermatrix.hpp"

namespace supercas {

// Graded tensor product: (A (x) B)^{k b}_{i a} = (-1)^{([a]+[b])[i]} A^k_i B^b_a.
// Associative; the n-fold product reproduces the general multi-factor signs.
SuperMatrix graded_kron(const SuperMatrix& a, const SuperMatrix& b);

// Places an operator A on V^{(x)r} into V^{(x)s} at the given strictly
// increasing 1-based factor positions. Identity acts on all other factors.
SuperMatrix place(const SuperMatrix& a, const std::vector<std::size_t>& positions, std::size_t s);

// Two-site placement at arbitrary distinct 1-based positions (p, q): for
// p > q the two tensor slots of A are swapped by superpermutation conjugation
// before sorted placement.
SuperMatrix place2(const SuperMatrix& a, std::size_t p, std::size_t q, std::size_t s);

// Superpermutation on V (x) V: P^{k1 k2}_{m1 m2} = (-1)^{[k1][k2]} d^{k1}_{m2} d^{k2}_{m1}.
SuperMatrix superperm(const GradedSpace& v);

// Conjugation of a two-factor operator by the superpermutation: swaps the
// roles of the two slots.
SuperMatrix swap_slots(const SuperMatrix& a);

// Supertrace over the second factor of an operator on a two-factor space:
// (str2 A)^i_j = sum_b (-1)^{[b]} A^{ib}_{jb}.
SuperMatrix partial_supertrace_second(const SuperMatrix& a);

// Graded commutator [A,B] = AB - (-1)^{[A][B]} BA for homogeneous operators.
SuperMatrix graded_commutator(const SuperMatrix& a, int par_a, const SuperMatrix& b, int par_b);

// Anticommutator wrt the grading: AB + (-1)^{[A][B]} BA.
SuperMatrix graded_anticommutator(const SuperMatrix& a, int par_a, const SuperMatrix& b, int par_b);

// T2(X) = X (x) I + I (x) X on V (x) V (tensor-product representation action).
SuperMatrix coproduct_action(const SuperMatrix& x);

// Exact inverse by Gauss-Jordan elimination; throws if singular.
SuperMatrix inverse(const SuperMatrix& a);

// Plain (ungraded) transpose; row and column spaces swap.
SuperMatrix transpose_plain(const SuperMatrix& a);

} // namespace supercas
