// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "floer_rings/quotient.hpp"

namespace fr {

/// One generalized eigenspace of a multiplication operator.
struct LocalPiece {
  /// Constant term (t = 0 value) of the eigenvalue of the split operator.
  Scalar eigenvalue;
  /// Constant-term eigenvalue of every even variable on this piece.
  std::map<std::string, Scalar> constant_terms;
  /// Rank over the series base (dim / N); equals dim when there is no t.
  int rank = 0;
  /// Dimension over Q(i).
  int dim = 0;
  /// Idempotent projector, equal to left multiplication by `idempotent`.
  Matrix projector;
  /// Columns span the piece.
  Matrix basis;
  Vector idempotent;
};

/// Decomposes Q into generalized eigenspaces of the named operator. Over a
/// ring with a capped weight-0 base variable t the split is computed at t = 0
/// and the idempotents are lifted by e <- 3e^2 - 2e^3. Pieces are sorted by
/// eigenvalue. Throws EigenvalueCollision when some other even variable has
/// more than one eigenvalue on a piece, StructureMismatch when Q is not free
/// over the base.
std::vector<LocalPiece> artinian_split(const QuotientAlgebra& q, std::string_view op);

/// Projectors idempotent, pairwise orthogonal, summing to the identity, and
/// each commuting with every operator of q.
bool verify_split(const QuotientAlgebra& q, const std::vector<LocalPiece>& pieces);

/// Q(i)-linear map on coordinate vectors.
using LinearOp = std::function<Vector(const Vector&)>;

LinearOp as_op(const SparseMatrix& m);
/// m + c * identity.
LinearOp shifted(const SparseMatrix& m, const Scalar& c);

/// Columns of `w` after applying op, reduced to an independent set.
Matrix image_of(const LinearOp& op, const Matrix& w);
/// W_0 = W, W_{i+1} = f W_i, ending with the first zero level (not stored).
/// Throws NotNilpotent when the chain fails to reach zero.
std::vector<Matrix> filtration_levels(const LinearOp& f, const Matrix& w);

struct GrSlice {
  int index = 0;
  /// dim W_i - dim W_{i+1} over Q(i).
  int dim = 0;
  /// Smallest m with g^m W_i contained in W_{i+1}.
  int nilpotency = 0;
  /// Matrix of g on W_i / W_{i+1} in a complement basis.
  Matrix induced;
};

/// Slices of Gr_f W together with the action of g.
std::vector<GrSlice> associated_graded(const LinearOp& f, const LinearOp& g, const Matrix& w);

/// Smallest m with g^m (upper) contained in lower, or -1 if none up to
/// dim(upper) + 1.
int relative_nilpotency(const LinearOp& g, const Matrix& upper, const Matrix& lower);

/// True when span{ h^s g^j v : s, j >= 0 } + lower = upper, where h is the
/// base operator (pass nullptr for none).
bool cyclic_modulo(const LinearOp& g, const LinearOp* h, const Vector& v, const Matrix& upper, const Matrix& lower);

/// Dimension of the column span.
int span_dim(const Matrix& m);

}  // namespace fr
