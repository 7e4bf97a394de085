#include "aromatic/substitution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace aromatic {

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v)
    {
        auto at = [this](int i) -> int& { return parent[static_cast<std::size_t>(i)]; };
        while (at(v) != v) {
            at(v) = at(at(v));
            v = at(v);
        }
        return v;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
    std::vector<int> parent;
};

void require_tree_map(const CoeffMap& b)
{
    if (b.domain() != Domain::AT)
        throw std::invalid_argument("domain mismatch: the substituted series must be a map on aromatic trees");
}

}  // namespace

std::vector<TreePartition> tree_partitions(const AromaticForest& forest)
{
    const auto& succ = forest.graph().successors();
    const std::size_t n = succ.size();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < n; ++v)
        if (succ[v] >= 0) edges.emplace_back(static_cast<int>(v), succ[v]);
    if (edges.size() > 30) throw std::length_error("tree partition enumeration limited to 30 edges");

    std::vector<TreePartition> out;
    for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << edges.size()); ++cut) {
        std::vector<int> kept(n, -1);
        std::vector<std::pair<int, int>> cut_edges;
        DisjointSets sets(n);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto [u, v] = edges[e];
            if (cut >> e & 1U) {
                cut_edges.emplace_back(u, v);
            } else {
                kept[static_cast<std::size_t>(u)] = v;
                sets.unite(u, v);
            }
        }

        // Rooted components become blocks; rootless ones must be placed in one.
        std::vector<int> block_of_rep(n, -1);
        std::vector<int> rooted;    // representatives, block order
        std::vector<int> rootless;  // representatives
        for (std::size_t v = 0; v < n; ++v)
            if (kept[v] < 0) {
                block_of_rep[static_cast<std::size_t>(sets.find(static_cast<int>(v)))] = static_cast<int>(rooted.size());
                rooted.push_back(sets.find(static_cast<int>(v)));
            }
        for (std::size_t v = 0; v < n; ++v) {
            const int r = sets.find(static_cast<int>(v));
            if (r == static_cast<int>(v) && block_of_rep[v] < 0) rootless.push_back(r);
        }
        if (rooted.empty() && !rootless.empty()) continue;

        std::vector<std::size_t> place(rootless.size(), 0);
        while (true) {
            TreePartition p;
            p.block_of.assign(n, -1);
            for (std::size_t v = 0; v < n; ++v) {
                const int r = sets.find(static_cast<int>(v));
                const int b = block_of_rep[static_cast<std::size_t>(r)];
                if (b >= 0) {
                    p.block_of[v] = b;
                } else {
                    const auto k = static_cast<std::size_t>(std::find(rootless.begin(), rootless.end(), r) - rootless.begin());
                    p.block_of[v] = static_cast<int>(place[k]);
                }
            }
            for (std::size_t b = 0; b < rooted.size(); ++b) {
                std::vector<int> local(n, -1);
                std::vector<int> members;
                for (std::size_t v = 0; v < n; ++v)
                    if (p.block_of[v] == static_cast<int>(b)) {
                        local[v] = static_cast<int>(members.size());
                        members.push_back(static_cast<int>(v));
                    }
                std::vector<int> block_succ(members.size(), -1);
                for (std::size_t i = 0; i < members.size(); ++i) {
                    const int s = kept[static_cast<std::size_t>(members[i])];
                    if (s >= 0) block_succ[i] = local[static_cast<std::size_t>(s)];
                }
                p.blocks.push_back(canonicalize(DirectedGraph::from_successors(std::move(block_succ))));
            }
            p.cut_edges = cut_edges;
            p.skeleton = skeleton(p);
            out.push_back(std::move(p));

            std::size_t i = 0;
            while (i < place.size() && ++place[i] == rooted.size()) place[i++] = 0;
            if (i == place.size()) break;
        }
    }
    return out;
}

AromaticForest skeleton(const TreePartition& partition)
{
    std::vector<int> succ(partition.blocks.size(), -1);
    for (const auto& [u, v] : partition.cut_edges) {
        auto& slot = succ[static_cast<std::size_t>(partition.block_of[static_cast<std::size_t>(u)])];
        if (slot != -1) throw std::logic_error("block with two outgoing cut edges");
        slot = partition.block_of[static_cast<std::size_t>(v)];
    }
    return canonicalize(DirectedGraph::from_successors(std::move(succ)));
}

CoeffMap star_product(const CoeffMap& b, const CoeffMap& a, std::size_t order)
{
    require_tree_map(b);
    if (b.order() < order || a.order() < order) throw std::invalid_argument("truncation-order mismatch in star_product");
    CoeffMap out(Domain::AF, order);
    for (const auto& phi : enumerate_up_to(order, ForestFilter::AF)) {
        Rational value = 0;
        for (const auto& p : tree_partitions(phi)) {
            Rational term = a(p.skeleton);
            for (const auto& block : p.blocks) {
                if (term == 0) break;
                term *= b(block);
            }
            value += term;
        }
        out.set(phi, value);
    }
    return out;
}

CoeffMap star_inverse(const CoeffMap& b, std::size_t order)
{
    require_tree_map(b);
    if (b.order() < order) throw std::invalid_argument("truncation-order mismatch in star_inverse");
    const auto node = parse("b");
    const Rational b1 = order >= 1 ? b(node) : Rational(0);
    if (b1 == 0) throw std::domain_error("b(b) = 0: no inverse for the substitution law");

    CoeffMap inv(Domain::AT, order);
    inv.set(node, 1 / b1);
    // (inv * b)(tau) = 0 for tau != b; the single-block partition contributes b(b) inv(tau).
    for (const auto& tau : enumerate_up_to(order, ForestFilter::AT)) {
        if (tau.size() < 2) continue;
        Rational acc = 0;
        for (const auto& p : tree_partitions(tau)) {
            if (p.blocks.size() == 1) continue;
            Rational term = b(p.skeleton);
            for (const auto& block : p.blocks) term *= inv(block);
            acc += term;
        }
        inv.set(tau, -acc / b1);
    }
    return inv;
}

CoeffMap divergence(const CoeffMap& b, std::size_t order)
{
    require_tree_map(b);
    if (b.order() < order) throw std::invalid_argument("truncation-order mismatch in divergence");
    CoeffMap out(Domain::A, order);
    for (const auto& phi : enumerate_up_to(order, ForestFilter::A)) {
        Rational acc = 0;
        for (int v = 0; v < static_cast<int>(phi.size()); ++v) acc += b(delete_out_edge(phi, v));
        out.set(phi, acc);
    }
    return out;
}

SymbolicPolynomial star_product_symbolic(const AromaticForest& forest)
{
    SymbolicPolynomial poly;
    for (const auto& p : tree_partitions(forest)) {
        SymbolicPolynomial::Monomial m;
        ++m["a(" + p.skeleton.text() + ")"];
        for (const auto& block : p.blocks) ++m["b(" + block.text() + ")"];
        poly.add(m, 1);
    }
    return poly;
}

}  // namespace aromatic
