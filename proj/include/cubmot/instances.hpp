#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "cubmot/motiveiso.hpp"
#include "cubmot/quadform.hpp"

namespace cubmot {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);

/// Symmetric integer Gram with small entries and nonzero determinant.
Matrix random_nondegenerate_gram(Rng& rng, int rank);
/// Integer matrix with determinant +-1 built from elementary operations.
Matrix random_unimodular(Rng& rng, int n, int steps);
/// Product of one or two reflections in random anisotropic vectors.
Matrix random_isometry(Rng& rng, const QuadSpace& v);

struct WittInstance {
  WittInput input;
  std::string description;
};

/// dim V <= 6, permutation group of order <= 8, non-degenerate W of dim <= 2.
WittInstance random_witt_instance(Rng& rng);
/// Same shape, but W contains an isotropic fixed vector.
WittInstance random_degenerate_witt_instance(Rng& rng);

struct GammaInstance {
  FourfoldData x, x2;
  Matrix iso_tr;   // V -> V', isometric on the transcendental part
  Matrix ambient;  // isometry V -> V' handed to the Witt solver
};

/// Two fourfold data sets with isometric primitive spaces, algebraic rank
/// <= max_alg and, optionally, a Z/2 action fixing the algebraic classes.
GammaInstance random_gamma_instance(Rng& rng, const Matrix& gram, int max_alg, bool with_group);

}  // namespace cubmot
