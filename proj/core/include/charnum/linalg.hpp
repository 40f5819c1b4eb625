#pragma once

#include <charnum/matrix.hpp>

#include <cstddef>
#include <vector>

namespace charnum {

/*
 * Exact linear algebra over Q.
 *
 * Every routine first scales each row by the lcm of its denominators so the
 * work matrix is integral, then runs fraction-free (Bareiss) elimination on
 * BigInt entries. Each exact division in the elimination is by the previous
 * pivot, which keeps intermediate entries equal to minors of the input and
 * avoids rational coefficient blow-up.
 */

/// Throws NonSquare if m is not square.
Rational determinant(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column in increasing column
/// order; each vector's first nonzero entry is 1. Empty when the kernel is
/// trivial. A matrix with zero rows yields the standard basis.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Exact inverse. Throws NonSquare, or std::domain_error if m is singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Scales v so that its first nonzero entry is 1. Zero vectors are returned unchanged.
std::vector<Rational> normalize_leading(std::vector<Rational> v);

}  // namespace charnum
