#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace aromatic;

namespace oracle {

namespace {

Successors relabel(const Successors& succ, const std::vector<int>& p)
{
    Successors out(succ.size(), -1);
    for (std::size_t v = 0; v < succ.size(); ++v)
        out[static_cast<std::size_t>(p[v])] = succ[v] < 0 ? -1 : p[static_cast<std::size_t>(succ[v])];
    return out;
}

std::vector<int> identity(std::size_t n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace

Successors certificate(const Successors& succ)
{
    auto p = identity(succ.size());
    Successors best = succ;
    do {
        best = std::min(best, relabel(succ, p));
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

std::uint64_t automorphism_count(const Successors& succ)
{
    auto p = identity(succ.size());
    std::uint64_t count = 0;
    do {
        if (relabel(succ, p) == succ) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

std::set<Successors> isomorphism_classes(std::size_t n)
{
    std::set<Successors> classes;
    Successors succ(n, -1);
    while (true) {
        classes.insert(certificate(succ));
        std::size_t i = 0;
        while (i < n && ++succ[i] == static_cast<int>(n)) succ[i++] = -1;
        if (i == n) break;
    }
    return classes;
}

std::size_t root_count(const Successors& succ)
{
    return static_cast<std::size_t>(std::count(succ.begin(), succ.end(), -1));
}

std::size_t component_count(const Successors& succ)
{
    std::vector<int> parent = identity(succ.size());
    std::function<int(int)> find = [&](int v) {
        return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
    };
    for (std::size_t v = 0; v < succ.size(); ++v)
        if (succ[v] >= 0) parent[static_cast<std::size_t>(find(static_cast<int>(v)))] = find(succ[v]);
    std::size_t count = 0;
    for (std::size_t v = 0; v < succ.size(); ++v)
        if (find(static_cast<int>(v)) == static_cast<int>(v)) ++count;
    return count;
}

bool is_rooted_tree(const Successors& succ) { return root_count(succ) == 1 && component_count(succ) == 1; }

TensorSum coproduct_by_subsets(const AromaticForest& forest)
{
    const auto& succ = forest.graph().successors();
    const std::size_t n = succ.size();
    TensorSum sum;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool closed = true;
        for (std::size_t v = 0; v < n && closed; ++v)
            if ((s >> v & 1U) && succ[v] >= 0 && !(s >> succ[v] & 1U)) closed = false;
        if (!closed) continue;
        auto induced = [&](std::uint64_t mask) {
            std::vector<int> id(n, -1);
            int k = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (mask >> v & 1U) id[v] = k++;
            std::vector<int> sub(static_cast<std::size_t>(k), -1);
            for (std::size_t v = 0; v < n; ++v)
                if ((mask >> v & 1U) && succ[v] >= 0 && (mask >> succ[v] & 1U))
                    sub[static_cast<std::size_t>(id[v])] = id[static_cast<std::size_t>(succ[v])];
            return canonicalize(DirectedGraph::from_successors(sub));
        };
        const std::uint64_t all = (std::uint64_t{1} << n) - 1;
        sum.add(induced(all & ~s), induced(s), 1);
    }
    return sum;
}

Rational composition_by_subsets(const CoeffMap& b, const CoeffMap& a, const AromaticForest& forest)
{
    Rational total = 0;
    for (const auto& [pair, m] : coproduct_by_subsets(forest).terms) total += m * b(pair.first) * a(pair.second);
    return total;
}

PolyScalar operator_by_index_sum(const DirectedGraph& graph, const PolyVecField& f, const PolyScalar& G)
{
    const auto& succ = graph.successors();
    const std::size_t n = succ.size(), dim = G.dimension();
    std::vector<std::vector<std::size_t>> preds(n);
    for (std::size_t v = 0; v < n; ++v)
        if (succ[v] >= 0) preds[static_cast<std::size_t>(succ[v])].push_back(v);

    PolyScalar total(dim);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        PolyScalar term = PolyScalar::constant(dim, 1);
        for (std::size_t v = 0; v < n && !term.is_zero(); ++v) {
            PolyScalar factor = f[idx[v]];
            for (auto q : preds[v]) factor = factor.derivative(idx[q]);
            term = term * factor;
        }
        PolyScalar g = G;
        for (std::size_t v = 0; v < n; ++v)
            if (succ[v] < 0) g = g.derivative(idx[v]);
        total += term * g;

        std::size_t i = 0;
        while (i < n && ++idx[i] == dim) idx[i++] = 0;
        if (i == n) break;
    }
    return total;
}

std::map<SymbolicPolynomial::Monomial, Rational> substitution_by_grafting(const AromaticForest& forest)
{
    std::map<SymbolicPolynomial::Monomial, Rational> out;
    const std::size_t n = forest.size();
    if (n == 0) {
        out[{{"a(1)", 1}}] = 1;
        return out;
    }
    const auto trees = enumerate_up_to(n, ForestFilter::AT);
    for (const auto& chi : enumerate_up_to(n, ForestFilter::AF)) {
        if (chi.is_unit()) continue;
        const auto& chi_succ = chi.graph().successors();
        const std::size_t m = chi.size();
        std::vector<const AromaticForest*> theta(m);
        std::function<void(std::size_t, std::size_t)> assign = [&](std::size_t v, std::size_t used) {
            if (v == m) {
                if (used != n) return;
                std::vector<int> offset(m + 1, 0);
                for (std::size_t k = 0; k < m; ++k) offset[k + 1] = offset[k] + static_cast<int>(theta[k]->size());
                // Graft targets: one per skeleton edge, any vertex of the target block.
                std::vector<std::size_t> edges;
                for (std::size_t k = 0; k < m; ++k)
                    if (chi_succ[k] >= 0) edges.push_back(k);
                std::vector<int> target(edges.size(), 0);
                std::size_t hits = 0;
                while (true) {
                    std::vector<int> succ(n, -1);
                    for (std::size_t k = 0; k < m; ++k) {
                        const auto& local = theta[k]->graph().successors();
                        for (std::size_t u = 0; u < local.size(); ++u)
                            if (local[u] >= 0) succ[static_cast<std::size_t>(offset[k]) + u] = offset[k] + local[u];
                    }
                    for (std::size_t e = 0; e < edges.size(); ++e) {
                        const std::size_t k = edges[e];
                        const auto& local = theta[k]->graph().successors();
                        const auto root = static_cast<std::size_t>(std::find(local.begin(), local.end(), -1) - local.begin());
                        succ[static_cast<std::size_t>(offset[k]) + root] =
                            offset[static_cast<std::size_t>(chi_succ[k])] + target[e];
                    }
                    if (canonicalize(DirectedGraph::from_successors(succ)) == forest) ++hits;
                    std::size_t e = 0;
                    while (e < edges.size() &&
                           ++target[e] == static_cast<int>(theta[static_cast<std::size_t>(chi_succ[edges[e]])]->size()))
                        target[e++] = 0;
                    if (e == edges.size()) break;
                }
                if (hits == 0) return;
                SymbolicPolynomial::Monomial mono;
                ++mono["a(" + chi.text() + ")"];
                std::uint64_t sigma_theta = 1;
                for (const auto* t : theta) {
                    ++mono["b(" + t->text() + ")"];
                    sigma_theta *= t->sigma();
                }
                Rational weight(static_cast<long>(hits * forest.sigma()), static_cast<long>(chi.sigma() * sigma_theta));
                weight.canonicalize();
                out[mono] += weight;
                return;
            }
            for (const auto& t : trees)
                if (used + t.size() + (m - v - 1) <= n) {
                    theta[v] = &t;
                    assign(v + 1, used + t.size());
                }
        };
        assign(0, 0);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Rational star_by_grafting(const CoeffMap& b, const CoeffMap& a, const AromaticForest& forest)
{
    Rational total = 0;
    for (const auto& [mono, c] : substitution_by_grafting(forest)) {
        Rational term = c;
        for (const auto& [symbol, e] : mono) {
            const auto inner = symbol.substr(2, symbol.size() - 3);
            const Rational v = symbol[0] == 'a' ? a.at(inner) : b.at(inner);
            for (int k = 0; k < e; ++k) term *= v;
        }
        total += term;
    }
    return total;
}

CoeffMap series_product(const CoeffMap& a, const CoeffMap& b, std::size_t order)
{
    std::map<AromaticForest, Rational> coefficient;  // of the forest itself, i.e. value / sigma
    const auto forests = enumerate_up_to(order, ForestFilter::A);
    for (const auto& g1 : forests)
        for (const auto& g2 : forests) {
            if (g1.size() + g2.size() > order) continue;
            coefficient[concat(g1, g2)] += a(g1) * b(g2) / Rational(static_cast<long>(g1.sigma() * g2.sigma()));
        }
    CoeffMap out(Domain::A, order);
    for (const auto& [g, c] : coefficient) out.set(g, c * Rational(static_cast<long>(g.sigma())));
    return out;
}

std::uint64_t labelling_count(const TreePartition& partition)
{
    const std::size_t m = partition.blocks.size();
    Successors quotient(m, -1);
    for (const auto& [u, v] : partition.cut_edges)
        quotient[static_cast<std::size_t>(partition.block_of[static_cast<std::size_t>(u)])] =
            partition.block_of[static_cast<std::size_t>(v)];
    const auto& target = partition.skeleton.graph().successors();
    auto p = identity(m);
    std::uint64_t count = 0;
    do {
        if (relabel(quotient, p) == target) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

std::vector<int> random_permutation(std::size_t n, std::uint64_t seed)
{
    auto p = identity(n);
    std::mt19937_64 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace oracle
