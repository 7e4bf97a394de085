#pragma once

// Elemental differential operators of aromatic forests on polynomial vector
// fields, S-series as h-graded operators, and exact checks of the composition
// and substitution identities.

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "aromatic/forest.hpp"
#include "aromatic/polynomial.hpp"
#include "aromatic/series.hpp"

namespace aromatic {

/// Index k holds the coefficient of h^k.
using GradedPoly = std::vector<PolyScalar>;
/// Index k holds the coefficient of h^k (index 0 unused by B-series, kept zero).
using GradedField = std::vector<PolyVecField>;

/// F_f(phi)[G]. Each vertex is a factor f^{i_v} differentiated once per
/// predecessor; each root differentiates G; repeated indices are summed.
PolyScalar apply_operator(const AromaticForest& forest, const PolyVecField& f, const PolyScalar& G);
PolyScalar apply_operator(const DirectedGraph& graph, const PolyVecField& f, const PolyScalar& G);
/// Same with one field per vertex (multilinear form); fields.size() == graph.size().
PolyScalar apply_operator(const DirectedGraph& graph, std::span<const PolyVecField> fields, const PolyScalar& G);

/// The vector field F_f(tau) of an aromatic tree, component j being F_f(tau)[x_j].
PolyVecField elementary_field(const AromaticForest& tree, const PolyVecField& f);

/// Memoized F_f(phi)[G] for one fixed (f, G).
class OperatorCache {
public:
    OperatorCache(PolyVecField f, PolyScalar G);
    const PolyVecField& field() const noexcept { return f_; }
    const PolyScalar& target() const noexcept { return G_; }
    const PolyScalar& operator()(const AromaticForest& forest);

private:
    PolyVecField f_;
    PolyScalar G_;
    std::unordered_map<AromaticForest, PolyScalar> values_;
};

/// Grades 0..order of S_f(a)[G] = sum a(phi)/sigma(phi) h^{|phi|} F_f(phi)[G].
GradedPoly sseries_apply(const CoeffMap& a, const PolyVecField& f, const PolyScalar& G, std::size_t order);
GradedPoly sseries_apply(const CoeffMap& a, OperatorCache& cache, std::size_t order);

/// Grades 0..order of B_f(b) = sum b(tau)/sigma(tau) h^{|tau|} F_f(tau).
GradedField b_series_field(const CoeffMap& b, const PolyVecField& f, std::size_t order);

/// Grades 0..order of G(y + v(y)) for an h-graded field v with v[0] = 0, by
/// expanding each monomial of G.
GradedPoly taylor_shift(const PolyScalar& G, const GradedField& v, std::size_t order);

/// Outcome of an exact identity check. On failure, lhs/rhs show the first
/// differing grade.
struct Verification {
    bool passed = true;
    std::string lhs;
    std::string rhs;
    explicit operator bool() const noexcept { return passed; }
};

Verification compare_graded(const GradedPoly& lhs, const GradedPoly& rhs);

/// F_f(phi1)[F_f(phi2)[G]] against the sum over graph_composition(phi1, phi2).
Verification verify_composition_lemma(const AromaticForest& phi1, const AromaticForest& phi2, const PolyVecField& f,
                                      const PolyScalar& G);
Verification verify_composition_lemma(const AromaticForest& phi1, const AromaticForest& phi2, OperatorCache& cache);

/// S_f(b)[S_f(a)[G]] against S_f(b.a)[G], grade by grade.
Verification verify_composition_theorem(const CoeffMap& b, const CoeffMap& a, const PolyVecField& f,
                                        const PolyScalar& G, std::size_t order);

/// S_g(a)[G] with g = B_f(b) against S_f(b * a)[G]. The grade of a term of
/// S_g(a) is the total grade of the field components placed on its vertices.
Verification verify_substitution_theorem(const CoeffMap& b, const CoeffMap& a, const PolyVecField& f,
                                         const PolyScalar& G, std::size_t order);

/// G(y + B_f(a)(y)) against S_f(bar a)[G].
Verification verify_sseries_of_map(const CoeffMap& a, const PolyVecField& f, const PolyScalar& G, std::size_t order);

}  // namespace aromatic
