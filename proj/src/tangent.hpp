#pragma once

// Vector fields on P^n, written as matrices A modulo scalars, that are
// tangent to a complete intersection V(f_1, ..., f_k).

#include <vector>

#include "forms.hpp"

namespace cibound {

struct TangentReport {
  int solution_dimension = 0;
  int projective_dimension = 0;
  std::vector<Matrix> basis;
};

// D_A f = sum_{i,m} A_im x_m df/dx_i.
HomogeneousForm derivation(const Matrix& a, const HomogeneousForm& f);

// True if D_A f_j lies in the span of the f_l with deg f_l = deg f_j, for all j.
bool is_tangent_field(const FormTuple& t, const Matrix& a);

/// Solves D_A f_j = sum_{l : d_l = d_j} c_jl f_l for (A, c) over the field
/// of t and projects the solutions to A. The identity is always a solution.
TangentReport infinitesimal_symmetries(const FormTuple& t);

/// Over a field of characteristic 2, the quadrics in P^{2r-1}
///   sum_{i<r} x_i x_{i+r},   sum_{i<r} a_i x_i x_{i+r} + sum_{i<2r} b_i x_i^2.
/// CharMismatch in other characteristics.
FormTuple exceptional_quadric_pair(int r, const std::vector<FieldElement>& a, const std::vector<FieldElement>& b,
                                   const Field& field);

// The r diagonal fields x_i d/dx_i + x_{i+r} d/dx_{i+r}, i < r.
std::vector<Matrix> quadric_pair_fields(int r, const Field& field);

}  // namespace cibound
