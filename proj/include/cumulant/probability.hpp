#pragma once

#include <span>
#include <string>
#include <vector>

#include "cumulant/graded_algebra.hpp"

namespace cumulant {

using MomentSequence = std::vector<Scalar>;

/// Non-unital truncated polynomial algebra: basis x1..xN in degree 0,
/// xi·xj = x(i+j) when i+j <= N and zero otherwise.
Algebra truncated_polynomial_algebra(int top_power, const std::string& variable = "x");

/// One-dimensional algebra spanned by "1" with 1·1 = 1.
Algebra point_algebra();

/// Degree-0 functional xk ↦ moments[k-1]·1.
LinearMap expectation(const Algebra& polynomials, const Algebra& point, std::span<const Scalar> moments);

/// κ₁..κₙ as the homomorphism defects gʲ(x,…,x) of the expectation
/// functional. Throws MismatchError unless 1 <= n <= moments.size().
std::vector<Scalar> cumulants_from_moments(std::span<const Scalar> moments, int n);

/// κ₁..κₙ by κₙ = mₙ - Σ_{k<n} C(n-1,k-1) κₖ m_{n-k}.
std::vector<Scalar> oracle_cumulants(std::span<const Scalar> moments, int n);

}  // namespace cumulant
