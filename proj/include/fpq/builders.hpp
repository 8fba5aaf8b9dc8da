#pragma once

#include <string>

#include "fpq/quiver.hpp"

namespace fpq {

enum class DynkinType { A, D, E6, E7, E8 };

/// Hereditary Dynkin quiver. For type A the orientation string has one
/// character per edge between i and i+1: '<' points the arrow i+1 -> i
/// (default), '>' points i -> i+1. For types D and E the arrows point
/// along the tree toward vertex 0 (the branch vertex for D, the end of
/// the long arm adjacent to the branch for E); pass orientation "subspace"
/// or "" for that default.
BoundQuiver dynkin(DynkinType t, int n, const std::string& orientation = "");

enum class CanonicalType { A, D, E };

/// Canonical presentations: two poles 0 (sink) and 0' (source) with arms
/// between them. Vertex encoding: 0 -> id 0, 0' -> id 1, arm vertex (i,j)
/// follows, numbered arm by arm. Type A(n,m) has two arms of lengths n, m
/// and no relation; D(n) three arms of lengths n-2, 2, 2 with the single
/// relation a1*...*a_{n-2} + b1*b2 + c1*c2; E(n), n in {6,7,8}, arms
/// n-3, 2, 3 with a1*...*a_{n-3} + b1*b2 + c1*c2*c3.
BoundQuiver canonical(CanonicalType t, int n, int m = 0);

/// Cyclic quiver on n vertices (arrows i -> i+1 mod n) with every path of
/// length `nilpotency` as a relation. Its nilpotent representations model
/// tube modules of quasi-length <= nilpotency.
BoundQuiver cyclic_tube(int rank, int nilpotency);

}  // namespace fpq
