#pragma once

// Brute-force reference implementations used only by the tests. Each one
// follows a definition directly, without sharing the library's algorithms.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aromatic/forest.hpp"
#include "aromatic/polynomial.hpp"
#include "aromatic/series.hpp"
#include "aromatic/substitution.hpp"

namespace oracle {

using Successors = std::vector<int>;

/// Lexicographically smallest relabeled successor array over all n! permutations.
Successors certificate(const Successors& succ);

/// Number of vertex permutations preserving the edge set.
std::uint64_t automorphism_count(const Successors& succ);

/// All out-degree <= 1 graphs on n labelled vertices, reduced to certificates.
std::set<Successors> isomorphism_classes(std::size_t n);

bool is_rooted_tree(const Successors& succ);
std::size_t root_count(const Successors& succ);
std::size_t component_count(const Successors& succ);

/// Coproduct by scanning all 2^n vertex subsets with no edge leaving them.
aromatic::TensorSum coproduct_by_subsets(const aromatic::AromaticForest& forest);

/// sum over subsets S closed under successors of b(V \ S) a(S).
aromatic::Rational composition_by_subsets(const aromatic::CoeffMap& b, const aromatic::CoeffMap& a,
                                          const aromatic::AromaticForest& forest);

/// Index-loop evaluation: sum over every assignment V -> {0..n-1} of the
/// product of the vertex factors times the root derivatives of G.
aromatic::PolyScalar operator_by_index_sum(const aromatic::DirectedGraph& graph, const aromatic::PolyVecField& f,
                                           const aromatic::PolyScalar& G);

/// The substitution law by grafting: for every skeleton chi, tree assignment
/// Theta to its vertices and choice of graft targets, build the graph and
/// collect sigma(phi) / (sigma(chi) prod sigma(theta)) a(chi) prod b(theta).
/// Coefficients are returned exactly (they must come out integral).
std::map<aromatic::SymbolicPolynomial::Monomial, aromatic::Rational> substitution_by_grafting(
    const aromatic::AromaticForest& forest);

/// Same, specialised to numeric maps.
aromatic::Rational star_by_grafting(const aromatic::CoeffMap& b, const aromatic::CoeffMap& a,
                                    const aromatic::AromaticForest& forest);

/// Product of truncated formal series sum a(g)/sigma(g) g over rootless
/// forests, by pairing every two forests of the enumeration.
aromatic::CoeffMap series_product(const aromatic::CoeffMap& a, const aromatic::CoeffMap& b, std::size_t order);

/// Bijections from the blocks of a partition to the skeleton's canonical
/// vertices that carry the cut edges onto the skeleton edges.
std::uint64_t labelling_count(const aromatic::TreePartition& partition);

/// Deterministic pseudo-random relabeling of vertices 0..n-1.
std::vector<int> random_permutation(std::size_t n, std::uint64_t seed);

}  // namespace oracle
