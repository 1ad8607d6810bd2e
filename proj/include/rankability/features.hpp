#pragma once

#include <array>
#include <string_view>

#include "rankability/digraph.hpp"

namespace rankability {

inline constexpr int feature_count = 5;

// Order is part of the model contract; serialized models record it.
inline constexpr std::array<std::string_view, feature_count> feature_names = {
    "triangles", "contradictions", "out_degree_std", "algebraic_connectivity", "draws"};

using FeatureVector = std::array<double, feature_count>;

// Directed 3-cycles, computed as trace(A^3) / 3.
long long count_triangles(const Digraph& g);

// Vertex pairs with edges both ways.
long long count_contradictions(const Digraph& g);

// Vertex pairs with no edge either way.
long long count_draws(const Digraph& g);

// Population standard deviation (divisor n) of the out-degree sequence.
double out_degree_std(const Digraph& g);

// Smallest eigenvalue of Q^T ((L + L^T) / 2) Q where the columns of Q form an
// orthonormal basis of the subspace orthogonal to the all-ones vector.
double algebraic_connectivity(const Digraph& g);

FeatureVector feature_vector(const Digraph& g);

}  // namespace rankability
