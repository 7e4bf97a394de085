#pragma once

// Coefficient maps on aromatic forests and the algebra built from the
// coproduct: composition product and inverse, antipode, grafting composition,
// the dual product on rootless forests and the extension of aromatic-tree maps
// to all forests.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aromatic/forest.hpp"
#include "aromatic/rational.hpp"

namespace aromatic {

/// Index set a coefficient map is meant to live on.
enum class Domain { AF, AT, A };

std::string_view to_string(Domain d);
Domain parse_domain(std::string_view name);
bool in_domain(Domain d, const AromaticForest& forest);

/// Truncated linear functional forest -> rational. Forests up to `order` that
/// are absent have coefficient zero; larger forests are undefined.
class CoeffMap {
public:
    CoeffMap(Domain domain, std::size_t order);

    Domain domain() const noexcept { return domain_; }
    std::size_t order() const noexcept { return order_; }
    const std::map<AromaticForest, Rational>& entries() const noexcept { return entries_; }

    /// Throws std::out_of_range for forests above the truncation order.
    Rational operator()(const AromaticForest& forest) const;
    Rational at(std::string_view forest_text) const { return (*this)(parse(forest_text)); }

    /// Zero values are erased. Throws std::invalid_argument for keys outside the
    /// domain and std::out_of_range above the order.
    void set(const AromaticForest& forest, const Rational& value);
    void set(std::string_view forest_text, const Rational& value) { set(parse(forest_text), value); }
    void add(const AromaticForest& forest, const Rational& value);

    /// Same map viewed on a smaller truncation order.
    CoeffMap truncated(std::size_t order) const;

    friend bool operator==(const CoeffMap&, const CoeffMap&) = default;

private:
    Domain domain_;
    std::size_t order_;
    std::map<AromaticForest, Rational> entries_;
};

/// The counit: 1 on the empty forest, 0 elsewhere.
CoeffMap epsilon(Domain domain, std::size_t order);
/// Dual basis element forest*.
CoeffMap dual_basis(const AromaticForest& forest, Domain domain, std::size_t order);

/// Formal sum of forest pairs with integer multiplicities.
struct TensorSum {
    std::map<std::pair<AromaticForest, AromaticForest>, std::int64_t> terms;

    void add(const AromaticForest& left, const AromaticForest& right, std::int64_t m);
    friend bool operator==(const TensorSum&, const TensorSum&) = default;
};

/// Formal integer combination of forests. Composition results carry positive
/// multiplicities; the antipode produces signed ones.
struct FormalSum {
    std::map<AromaticForest, std::int64_t> terms;

    void add(const AromaticForest& forest, std::int64_t m);
    friend bool operator==(const FormalSum&, const FormalSum&) = default;
};

/// "m*(left|right)" terms joined by " + ", ordered by (left, right) text.
std::string render(const TensorSum& sum);
TensorSum parse_tensor_sum(std::string_view text);
/// "m*forest" terms joined by " + " (negative multiplicities as "-m*forest").
std::string render(const FormalSum& sum);

/// One split of a forest into (P*, R) where no edge leaves R.
struct AdmissiblePartition {
    AromaticForest left;   // P*, induced on the complement of R
    AromaticForest right;  // R, closed under successors
    std::uint64_t right_vertices = 0;
};

std::vector<AdmissiblePartition> admissible_partitions(const AromaticForest& forest);
TensorSum coproduct(const AromaticForest& forest);
/// Coproduct minus 1(x)forest and forest(x)1. Throws for the unit.
TensorSum reduced_coproduct(const AromaticForest& forest);

/// (b.a)(phi) = sum over coproduct terms of m * b(P*) * a(R), for all |phi| <= order.
CoeffMap comp_product(const CoeffMap& b, const CoeffMap& a, std::size_t order);
/// Two-sided inverse for the composition product; requires a(1) != 0.
CoeffMap comp_inverse(const CoeffMap& a, std::size_t order);

/// Antipode of the concatenation/coproduct bialgebra.
FormalSum antipode(const AromaticForest& forest);

/// Sum over maps from roots of phi1 into V(phi2) or nowhere, adding one edge
/// root -> image for each mapped root.
FormalSum graph_composition(const AromaticForest& phi1, const AromaticForest& phi2);

/// Product dual to the scaled coproduct on rootless forests:
/// (a.b)(g) = sigma(g) * sum_{g1 g2 = g} a(g1) b(g2) / (sigma(g1) sigma(g2)).
CoeffMap aroma_dual_product(const CoeffMap& a, const CoeffMap& b, std::size_t order);

/// Ordered splittings of a rootless forest into two sub-multisets of its
/// components; each distinct (first, second) pair appears once.
std::vector<std::pair<AromaticForest, AromaticForest>> aroma_splittings(const AromaticForest& gamma);

/// Splits a forest into its rootless part and its rooted-tree components.
std::pair<AromaticForest, std::vector<AromaticForest>> split_aroma(const AromaticForest& forest);

/// Value of the extension of an aromatic-tree map at one forest.
Rational bar_extend_at(const CoeffMap& a, const AromaticForest& forest);
/// Extension of an aromatic-tree map to all forests up to `order`.
CoeffMap bar_extend(const CoeffMap& a, std::size_t order);

}  // namespace aromatic
