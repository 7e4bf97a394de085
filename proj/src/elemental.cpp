#include "aromatic/elemental.hpp"
#include "aromatic/substitution.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace aromatic {

namespace {

using Vec = std::vector<PolyScalar>;

// sum_{j_1..j_m} prod_k slots[k]^{j_k} d_{j_1..j_m} p
PolyScalar contract(const PolyScalar& p, const std::vector<const Vec*>& slots, std::size_t k = 0)
{
    if (k == slots.size() || p.is_zero()) return p;
    PolyScalar sum(p.dimension());
    for (std::size_t j = 0; j < p.dimension(); ++j) {
        const auto& weight = (*slots[k])[j];
        if (weight.is_zero()) continue;
        const auto d = p.derivative(j);
        if (d.is_zero()) continue;
        sum += weight * contract(d, slots, k + 1);
    }
    return sum;
}

std::vector<bool> cycle_vertices(const std::vector<int>& succ)
{
    const std::size_t n = succ.size();
    std::vector<int> state(n, 0);  // 0 new, 1 on current walk, 2 finished
    std::vector<bool> on_cycle(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<int> walk;
        int v = static_cast<int>(start);
        while (v >= 0 && state[static_cast<std::size_t>(v)] == 0) {
            state[static_cast<std::size_t>(v)] = 1;
            walk.push_back(v);
            v = succ[static_cast<std::size_t>(v)];
        }
        if (v >= 0 && state[static_cast<std::size_t>(v)] == 1) {
            int u = v;
            do {
                on_cycle[static_cast<std::size_t>(u)] = true;
                u = succ[static_cast<std::size_t>(u)];
            } while (u != v);
        }
        for (int w : walk) state[static_cast<std::size_t>(w)] = 2;
    }
    return on_cycle;
}

struct Evaluation {
    PolyScalar aromas;             // product of the cycle traces
    std::vector<Vec> root_fields;  // one vector per root, in vertex order
};

Evaluation evaluate(const DirectedGraph& graph, std::span<const PolyVecField> fields, std::size_t dim)
{
    const auto& succ = graph.successors();
    const std::size_t n = succ.size();
    if (fields.size() != n) throw std::invalid_argument("one vector field per vertex required");
    for (const auto& f : fields)
        if (f.dimension() != dim) throw std::invalid_argument("dimension mismatch between vector field and target");

    const auto preds = graph.predecessors();
    const auto on_cycle = cycle_vertices(succ);

    std::vector<Vec> value(n);
    std::vector<bool> done(n, false);
    std::function<const Vec&(int)> vertex_field;
    auto tree_children = [&](int v) {
        std::vector<const Vec*> slots;
        for (int c : preds[static_cast<std::size_t>(v)])
            if (!on_cycle[static_cast<std::size_t>(c)]) slots.push_back(&vertex_field(c));
        return slots;
    };
    vertex_field = [&](int v) -> const Vec& {
        const auto uv = static_cast<std::size_t>(v);
        if (!done[uv]) {
            const auto slots = tree_children(v);
            value[uv].reserve(dim);
            for (std::size_t i = 0; i < dim; ++i) value[uv].push_back(contract(fields[uv][i], slots));
            done[uv] = true;
        }
        return value[uv];
    };

    Evaluation out{PolyScalar::constant(dim, 1), {}};
    std::vector<bool> seen(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        if (!on_cycle[v] || seen[v]) continue;
        std::vector<int> cycle;
        int u = static_cast<int>(v);
        do {
            seen[static_cast<std::size_t>(u)] = true;
            cycle.push_back(u);
            u = succ[static_cast<std::size_t>(u)];
        } while (u != static_cast<int>(v));

        // M_t[i][j]: vertex cycle[t] with index i, its cycle predecessor with index j.
        using Matrix = std::vector<Vec>;
        auto factor = [&](int c) {
            const auto slots = tree_children(c);
            Matrix m(dim, Vec(dim, PolyScalar(dim)));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    m[i][j] = contract(fields[static_cast<std::size_t>(c)][i].derivative(j), slots);
            return m;
        };
        Matrix product = factor(cycle[0]);
        for (std::size_t t = 1; t < cycle.size(); ++t) {
            const Matrix m = factor(cycle[t]);
            Matrix next(dim, Vec(dim, PolyScalar(dim)));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t k = 0; k < dim; ++k) {
                    if (m[i][k].is_zero()) continue;
                    for (std::size_t j = 0; j < dim; ++j) next[i][j] += m[i][k] * product[k][j];
                }
            product = std::move(next);
        }
        PolyScalar trace(dim);
        for (std::size_t i = 0; i < dim; ++i) trace += product[i][i];
        out.aromas = out.aromas * trace;
        if (out.aromas.is_zero()) return out;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (succ[v] < 0) out.root_fields.push_back(vertex_field(static_cast<int>(v)));
    return out;
}

PolyScalar apply_evaluation(const Evaluation& e, const PolyScalar& G)
{
    if (e.aromas.is_zero()) return PolyScalar(G.dimension());
    std::vector<const Vec*> slots;
    for (const auto& r : e.root_fields) slots.push_back(&r);
    return e.aromas * contract(G, slots);
}

std::string render_grade(std::size_t k, const PolyScalar& p) { return "h^" + std::to_string(k) + ": " + p.to_string(); }

}  // namespace

PolyScalar apply_operator(const DirectedGraph& graph, std::span<const PolyVecField> fields, const PolyScalar& G)
{
    return apply_evaluation(evaluate(graph, fields, G.dimension()), G);
}

PolyScalar apply_operator(const DirectedGraph& graph, const PolyVecField& f, const PolyScalar& G)
{
    const std::vector<PolyVecField> fields(graph.size(), f);
    return apply_operator(graph, fields, G);
}

PolyScalar apply_operator(const AromaticForest& forest, const PolyVecField& f, const PolyScalar& G)
{
    if (f.dimension() != G.dimension()) throw std::invalid_argument("dimension mismatch between f and G");
    return apply_operator(forest.graph(), f, G);
}

PolyVecField elementary_field(const AromaticForest& tree, const PolyVecField& f)
{
    if (tree.root_count() != 1) throw std::invalid_argument("elementary field requires an aromatic tree: " + tree.text());
    const std::vector<PolyVecField> fields(tree.size(), f);
    const auto e = evaluate(tree.graph(), fields, f.dimension());
    if (e.aromas.is_zero()) return PolyVecField::zero(f.dimension());
    Vec out;
    for (const auto& component : e.root_fields.front()) out.push_back(e.aromas * component);
    return PolyVecField(std::move(out));
}

OperatorCache::OperatorCache(PolyVecField f, PolyScalar G) : f_(std::move(f)), G_(std::move(G))
{
    if (f_.dimension() != G_.dimension()) throw std::invalid_argument("dimension mismatch between f and G");
}

const PolyScalar& OperatorCache::operator()(const AromaticForest& forest)
{
    auto it = values_.find(forest);
    if (it == values_.end()) it = values_.emplace(forest, apply_operator(forest, f_, G_)).first;
    return it->second;
}

GradedPoly sseries_apply(const CoeffMap& a, const PolyVecField& f, const PolyScalar& G, std::size_t order)
{
    OperatorCache cache(f, G);
    return sseries_apply(a, cache, order);
}

GradedPoly sseries_apply(const CoeffMap& a, OperatorCache& cache, std::size_t order)
{
    if (a.order() < order) throw std::invalid_argument("truncation-order mismatch in sseries_apply");
    GradedPoly out(order + 1, PolyScalar(cache.target().dimension()));
    for (const auto& [phi, c] : a.entries()) {
        if (phi.size() > order) continue;
        out[phi.size()] += cache(phi) * (c / phi.sigma());
    }
    return out;
}

GradedField b_series_field(const CoeffMap& b, const PolyVecField& f, std::size_t order)
{
    if (b.order() < order) throw std::invalid_argument("truncation-order mismatch in b_series_field");
    GradedField out(order + 1, PolyVecField::zero(f.dimension()));
    for (const auto& [tau, c] : b.entries()) {
        if (tau.size() > order || tau.root_count() != 1) continue;
        auto term = elementary_field(tau, f);
        term *= c / tau.sigma();
        out[tau.size()] += term;
    }
    return out;
}

GradedPoly taylor_shift(const PolyScalar& G, const GradedField& v, std::size_t order)
{
    const std::size_t dim = G.dimension();
    auto truncated_product = [&](const GradedPoly& x, const GradedPoly& y) {
        GradedPoly z(order + 1, PolyScalar(dim));
        for (std::size_t i = 0; i <= order; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= order; ++j)
                if (!y[j].is_zero()) z[i + j] += x[i] * y[j];
        }
        return z;
    };

    // powers[i][e] = (x_i + v_i)^e, truncated.
    std::vector<std::vector<GradedPoly>> powers(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        GradedPoly shifted(order + 1, PolyScalar(dim));
        shifted[0] = PolyScalar::variable(dim, i);
        for (std::size_t k = 1; k <= order && k < v.size(); ++k) shifted[k] = v[k][i];
        GradedPoly one(order + 1, PolyScalar(dim));
        one[0] = PolyScalar::constant(dim, 1);
        powers[i].push_back(std::move(one));
        powers[i].push_back(std::move(shifted));
    }

    GradedPoly out(order + 1, PolyScalar(dim));
    for (const auto& [key, c] : G.terms()) {
        const auto e = G.exponents(key);
        GradedPoly term(order + 1, PolyScalar(dim));
        term[0] = PolyScalar::constant(dim, c);
        for (std::size_t i = 0; i < dim; ++i) {
            while (powers[i].size() <= static_cast<std::size_t>(e[i]))
                powers[i].push_back(truncated_product(powers[i].back(), powers[i][1]));
            if (e[i] > 0) term = truncated_product(term, powers[i][static_cast<std::size_t>(e[i])]);
        }
        for (std::size_t k = 0; k <= order; ++k) out[k] += term[k];
    }
    return out;
}

Verification compare_graded(const GradedPoly& lhs, const GradedPoly& rhs)
{
    const std::size_t n = std::max(lhs.size(), rhs.size());
    for (std::size_t k = 0; k < n; ++k) {
        const bool lz = k >= lhs.size() || lhs[k].is_zero();
        const bool rz = k >= rhs.size() || rhs[k].is_zero();
        if (lz && rz) continue;
        if (!lz && !rz && lhs[k] == rhs[k]) continue;
        return {false, lz ? "h^" + std::to_string(k) + ": 0" : render_grade(k, lhs[k]),
                rz ? "h^" + std::to_string(k) + ": 0" : render_grade(k, rhs[k])};
    }
    return {};
}

Verification verify_composition_lemma(const AromaticForest& phi1, const AromaticForest& phi2, const PolyVecField& f,
                                      const PolyScalar& G)
{
    OperatorCache cache(f, G);
    return verify_composition_lemma(phi1, phi2, cache);
}

Verification verify_composition_lemma(const AromaticForest& phi1, const AromaticForest& phi2, OperatorCache& cache)
{
    const PolyScalar lhs = apply_operator(phi1, cache.field(), cache(phi2));
    PolyScalar rhs(cache.target().dimension());
    for (const auto& [psi, m] : graph_composition(phi1, phi2).terms) rhs += cache(psi) * Rational(m);
    if (lhs == rhs) return {};
    return {false, lhs.to_string(), rhs.to_string()};
}

Verification verify_composition_theorem(const CoeffMap& b, const CoeffMap& a, const PolyVecField& f,
                                        const PolyScalar& G, std::size_t order)
{
    const auto inner = sseries_apply(a, f, G, order);
    GradedPoly lhs(order + 1, PolyScalar(G.dimension()));
    for (std::size_t j = 0; j <= order; ++j) {
        if (inner[j].is_zero()) continue;
        const auto outer = sseries_apply(b, f, inner[j], order - j);
        for (std::size_t i = 0; i + j <= order; ++i) lhs[i + j] += outer[i];
    }
    const auto rhs = sseries_apply(comp_product(b, a, order), f, G, order);
    return compare_graded(lhs, rhs);
}

Verification verify_substitution_theorem(const CoeffMap& b, const CoeffMap& a, const PolyVecField& f,
                                         const PolyScalar& G, std::size_t order)
{
    const auto g = b_series_field(b, f, order);
    const std::size_t dim = G.dimension();
    GradedPoly lhs(order + 1, PolyScalar(dim));
    for (const auto& [phi, c] : a.entries()) {
        if (phi.size() > order) continue;
        const Rational weight = c / phi.sigma();
        std::vector<PolyVecField> fields(phi.size());
        std::function<void(std::size_t, std::size_t)> assign = [&](std::size_t v, std::size_t grade) {
            if (v == phi.size()) {
                lhs[grade] += apply_operator(phi.graph(), fields, G) * weight;
                return;
            }
            const std::size_t remaining = phi.size() - v - 1;  // each later vertex needs grade >= 1
            for (std::size_t k = 1; grade + k + remaining <= order; ++k) {
                if (g[k].is_zero()) continue;
                fields[v] = g[k];
                assign(v + 1, grade + k);
            }
        };
        assign(0, 0);
    }
    const auto rhs = sseries_apply(star_product(b, a, order), f, G, order);
    return compare_graded(lhs, rhs);
}

Verification verify_sseries_of_map(const CoeffMap& a, const PolyVecField& f, const PolyScalar& G, std::size_t order)
{
    if (a.domain() != Domain::AT) throw std::invalid_argument("domain mismatch: expected a map on aromatic trees");
    const auto lhs = taylor_shift(G, b_series_field(a, f, order), order);
    const auto rhs = sseries_apply(bar_extend(a, order), f, G, order);
    return compare_graded(lhs, rhs);
}

}  // namespace aromatic
