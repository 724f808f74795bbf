#pragma once

#include "qrep/numeric.hpp"
#include "qrep/representation.hpp"

#include <span>
#include <string>

namespace qrep {

/// The four Weierstrass-Kronecker families of indecomposable Kronecker
/// representations.
enum class KroneckerKind { jordan_first, jordan_second, wide, tall };

struct KroneckerFamily {
  KroneckerKind kind = KroneckerKind::jordan_first;
  Complex lambda = 0.0;  // eigenvalue, Jordan families only
  int n = 1;
};

std::string to_string(KroneckerKind kind);

/// Upper Jordan block lambda I + J_n.
Matrix jordan_block(Complex lambda, Index n);

///   jordan_first  : (lambda I + J_n, I_n)
///   jordan_second : (I_n, lambda I + J_n)
///   wide          : dims (n+1, n), maps [I_n 0] and [0 I_n]
///   tall          : dims (n, n+1), maps [I_n; 0] and [0; I_n]
Representation build_family(const KroneckerFamily& family);

/// A Kronecker representation together with an isomorphism onto it.
struct KroneckerReduction {
  Representation rep;
  VertexTuple witness;  // intertwiner from the (A, B) representation to `rep`
};

/// (A, B) ~ (I, A^{-1} B) for invertible A; witness (I, A^{-1}).
KroneckerReduction reduce_invertible_first(const Matrix& a, const Matrix& b,
                                           const Tolerances& tol = {});

/// (A, B) ~ (T, (1/y) I - (x/y) T) with T = (xA + yB)^{-1} A; witness (I, (xA+yB)^{-1}).
KroneckerReduction reduce_pencil(const Matrix& a, const Matrix& b, Complex x, Complex y,
                                 const Tolerances& tol = {});

/// (n+1)-Kronecker representation with a0 -> sum_k c_k T^k and a_k -> T^k (k = 1..n).
/// Requires c_0 != 0 and n >= 1.
Representation polynomial_model(const Matrix& t, std::span<const Complex> coeffs);

}  // namespace qrep
