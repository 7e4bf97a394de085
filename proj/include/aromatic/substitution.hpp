#pragma once

// Partitions of aromatic forests into aromatic trees, their skeletons, the
// substitution law and its inverse, and the divergence of aromatic B-series.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aromatic/forest.hpp"
#include "aromatic/series.hpp"

namespace aromatic {

/// A partition of a forest's vertices into blocks that are aromatic trees.
/// Edges of the forest that belong to no block are the cut edges; each one
/// leaves the root of its block and becomes an edge of the skeleton.
struct TreePartition {
    std::vector<AromaticForest> blocks;         // one aromatic tree per block
    std::vector<int> block_of;                  // canonical vertex -> block index
    std::vector<std::pair<int, int>> cut_edges; // (tail, head) in canonical vertex ids
    AromaticForest skeleton;
};

/// Every partition, generated as (cut-edge subset, placement of each rootless
/// leftover component into a rooted one). Partitions with equal blocks but
/// different cut edges are distinct.
std::vector<TreePartition> tree_partitions(const AromaticForest& forest);

/// Quotient by the blocks; one skeleton edge per cut edge.
AromaticForest skeleton(const TreePartition& partition);

/// (b * a)(phi) = sum over partitions of a(skeleton) * prod b(block).
/// `b` must live on aromatic trees; `a` may have any domain.
CoeffMap star_product(const CoeffMap& b, const CoeffMap& a, std::size_t order);

/// Inverse for the substitution law on aromatic-tree maps; requires b("b") != 0.
CoeffMap star_inverse(const CoeffMap& b, std::size_t order);

/// div of the B-series: nabla b(phi) = sum over vertices v of b(phi with the edge out of v removed),
/// supported on rootless forests.
CoeffMap divergence(const CoeffMap& b, std::size_t order);

/// Commutative polynomial in named symbols with integer coefficients; just
/// enough to print the substitution law with symbolic a(.) and b(.).
class SymbolicPolynomial {
public:
    using Monomial = std::map<std::string, int>;  // symbol -> exponent

    void add(const Monomial& m, std::int64_t coefficient);
    const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }

    /// "k*a(F)*b(G)^e + ..." with terms sorted by their rendered text.
    std::string to_string() const;
    static SymbolicPolynomial parse(std::string_view text);

    friend bool operator==(const SymbolicPolynomial&, const SymbolicPolynomial&) = default;

private:
    std::map<Monomial, std::int64_t> terms_;
};

/// The substitution law at one forest, with a(.) and b(.) left symbolic.
SymbolicPolynomial star_product_symbolic(const AromaticForest& forest);

}  // namespace aromatic
