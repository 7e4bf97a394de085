#include "aromatic/forest.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

namespace aromatic {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
{
}

// ---------------------------------------------------------------------------
// DirectedGraph

DirectedGraph::DirectedGraph(std::size_t vertex_count) : succ_(vertex_count, -1) {}

DirectedGraph DirectedGraph::from_labels(const std::vector<std::string>& vertices,
                                         const std::vector<std::pair<std::string, std::string>>& edges)
{
    std::map<std::string, int> id;
    for (const auto& v : vertices)
        if (!id.emplace(v, static_cast<int>(id.size())).second)
            throw std::invalid_argument("duplicate vertex label '" + v + "'");
    DirectedGraph g(vertices.size());
    for (const auto& [tail, head] : edges) {
        auto t = id.find(tail);
        auto h = id.find(head);
        if (t == id.end() || h == id.end())
            throw std::invalid_argument("edge (" + tail + ", " + head + ") references an unknown vertex");
        g.add_edge(t->second, h->second);
    }
    return g;
}

DirectedGraph DirectedGraph::from_successors(std::vector<int> successors)
{
    const int n = static_cast<int>(successors.size());
    for (int s : successors)
        if (s < -1 || s >= n) throw std::invalid_argument("successor index out of range");
    DirectedGraph g;
    g.succ_ = std::move(successors);
    return g;
}

void DirectedGraph::add_edge(int tail, int head)
{
    const int n = static_cast<int>(size());
    if (tail < 0 || tail >= n || head < 0 || head >= n) throw std::invalid_argument("edge endpoint out of range");
    auto& s = succ_[static_cast<std::size_t>(tail)];
    if (s == head) return;
    if (s != -1)
        throw std::invalid_argument("vertex " + std::to_string(tail) +
                                    " would have two outgoing edges; aromatic graphs allow at most one");
    s = head;
}

std::optional<int> DirectedGraph::successor(int v) const
{
    const int s = succ_.at(static_cast<std::size_t>(v));
    if (s < 0) return std::nullopt;
    return s;
}

std::vector<std::vector<int>> DirectedGraph::predecessors() const
{
    std::vector<std::vector<int>> preds(size());
    for (std::size_t v = 0; v < size(); ++v)
        if (succ_[v] >= 0) preds[static_cast<std::size_t>(succ_[v])].push_back(static_cast<int>(v));
    return preds;
}

std::size_t DirectedGraph::edge_count() const noexcept
{
    return static_cast<std::size_t>(std::count_if(succ_.begin(), succ_.end(), [](int s) { return s >= 0; }));
}

DirectedGraph DirectedGraph::relabeled(std::span<const int> new_id) const
{
    if (new_id.size() != size()) throw std::invalid_argument("relabeling has wrong length");
    std::vector<int> succ(size(), -1);
    for (std::size_t v = 0; v < size(); ++v) {
        const auto nv = static_cast<std::size_t>(new_id[v]);
        if (nv >= size() || succ[nv] != -1) throw std::invalid_argument("relabeling is not a permutation");
        succ[nv] = succ_[v] < 0 ? -2 : new_id[static_cast<std::size_t>(succ_[v])];
    }
    for (auto& s : succ)
        if (s == -2) s = -1;
    return from_successors(std::move(succ));
}

// ---------------------------------------------------------------------------
// Canonicalization

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("symmetry coefficient overflows 64 bits");
    return r;
}

std::uint64_t factorial(std::size_t k)
{
    std::uint64_t r = 1;
    for (std::size_t i = 2; i <= k; ++i) r = checked_mul(r, i);
    return r;
}

struct Labelled {
    std::string text;
    std::uint64_t sigma = 1;
};

// Sorts by text and returns the product of multiplicity factorials.
std::uint64_t sort_and_count(std::vector<Labelled>& items)
{
    std::sort(items.begin(), items.end(), [](const Labelled& a, const Labelled& b) { return a.text < b.text; });
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < items.size();) {
        std::size_t j = i;
        while (j < items.size() && items[j].text == items[i].text) ++j;
        s = checked_mul(s, factorial(j - i));
        i = j;
    }
    return s;
}

class Canonicalizer {
public:
    explicit Canonicalizer(const DirectedGraph& g) : g_(g), preds_(g.predecessors()), on_cycle_(g.size(), false)
    {
        mark_cycles();
    }

    std::vector<Labelled> components()
    {
        std::vector<Labelled> comps;
        const auto& succ = g_.successors();
        std::vector<bool> seen(g_.size(), false);
        for (std::size_t v = 0; v < g_.size(); ++v) {
            if (succ[v] < 0) comps.push_back(tree(static_cast<int>(v)));
            if (on_cycle_[v] && !seen[v]) comps.push_back(cycle(static_cast<int>(v), seen));
        }
        return comps;
    }

private:
    void mark_cycles()
    {
        const auto& succ = g_.successors();
        std::vector<int> state(g_.size(), 0);  // 0 new, 1 on current walk, 2 finished
        for (std::size_t start = 0; start < g_.size(); ++start) {
            if (state[start]) continue;
            std::vector<int> path;
            int v = static_cast<int>(start);
            while (v >= 0 && state[static_cast<std::size_t>(v)] == 0) {
                state[static_cast<std::size_t>(v)] = 1;
                path.push_back(v);
                v = succ[static_cast<std::size_t>(v)];
            }
            if (v >= 0 && state[static_cast<std::size_t>(v)] == 1) {
                auto it = std::find(path.begin(), path.end(), v);
                for (; it != path.end(); ++it) on_cycle_[static_cast<std::size_t>(*it)] = true;
            }
            for (int p : path) state[static_cast<std::size_t>(p)] = 2;
        }
    }

    // Tree hanging at v; children are the predecessors not lying on a cycle.
    Labelled tree(int v)
    {
        std::vector<Labelled> children;
        for (int p : preds_[static_cast<std::size_t>(v)])
            if (!on_cycle_[static_cast<std::size_t>(p)]) children.push_back(tree(p));
        Labelled out;
        out.sigma = sort_and_count(children);
        out.text = "b";
        if (!children.empty()) {
            out.text += '[';
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i) out.text += ',';
                out.text += children[i].text;
                out.sigma = checked_mul(out.sigma, children[i].sigma);
            }
            out.text += ']';
        }
        return out;
    }

    Labelled cycle(int start, std::vector<bool>& seen)
    {
        std::vector<Labelled> seq;
        int v = start;
        do {
            seen[static_cast<std::size_t>(v)] = true;
            seq.push_back(tree(v));
            v = g_.successors()[static_cast<std::size_t>(v)];
        } while (v != start);

        const std::size_t k = seq.size();
        Labelled out;
        std::uint64_t fixing_rotations = 0;
        for (std::size_t s = 0; s < k; ++s) {
            std::string text = "<";
            bool same = true;
            for (std::size_t i = 0; i < k; ++i) {
                if (i) text += ',';
                text += seq[(s + i) % k].text;
                same = same && seq[(s + i) % k].text == seq[i].text;
            }
            text += '>';
            if (same) ++fixing_rotations;
            if (s == 0 || text < out.text) out.text = std::move(text);
        }
        out.sigma = fixing_rotations;
        for (const auto& t : seq) out.sigma = checked_mul(out.sigma, t.sigma);
        return out;
    }

    const DirectedGraph& g_;
    std::vector<std::vector<int>> preds_;
    std::vector<bool> on_cycle_;
};

// Recursive-descent parser producing a graph; vertices numbered by appearance.
class GraphParser {
public:
    explicit GraphParser(std::string_view text) : text_(text) {}

    DirectedGraph parse()
    {
        if (text_ == "1") return DirectedGraph{};
        if (text_.empty()) throw ParseError("empty forest text (use \"1\" for the unit)", 0);
        while (true) {
            component();
            if (pos_ == text_.size()) break;
            expect(' ');
            if (pos_ == text_.size()) throw ParseError("trailing space", pos_ - 1);
        }
        return DirectedGraph::from_successors(std::move(succ_));
    }

private:
    void component()
    {
        if (peek() == '<') {
            ++pos_;
            std::vector<int> roots{tree()};
            while (peek() == ',') {
                ++pos_;
                roots.push_back(tree());
            }
            expect('>');
            for (std::size_t i = 0; i < roots.size(); ++i)
                succ_[static_cast<std::size_t>(roots[i])] = roots[(i + 1) % roots.size()];
        } else {
            tree();
        }
    }

    int tree()
    {
        expect('b');
        const int v = static_cast<int>(succ_.size());
        succ_.push_back(-1);
        if (peek() == '[') {
            ++pos_;
            succ_[static_cast<std::size_t>(tree())] = v;
            while (peek() == ',') {
                ++pos_;
                succ_[static_cast<std::size_t>(tree())] = v;
            }
            expect(']');
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c)
    {
        if (peek() != c) {
            std::string got = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
            throw ParseError(std::string("expected '") + c + "' but found " + got, pos_);
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<int> succ_;
};

}  // namespace

AromaticForest::AromaticForest() : text_("1") {}

std::vector<AromaticForest> AromaticForest::components() const
{
    std::vector<AromaticForest> out;
    if (is_unit()) return out;
    std::size_t start = 0;
    while (start <= text_.size()) {
        auto end = text_.find(' ', start);
        if (end == std::string::npos) end = text_.size();
        out.push_back(parse(std::string_view(text_).substr(start, end - start)));
        start = end + 1;
    }
    return out;
}

AromaticForest canonicalize(const DirectedGraph& g)
{
    AromaticForest f;
    if (g.size() == 0) return f;
    auto comps = Canonicalizer(g).components();
    f.sigma_ = sort_and_count(comps);
    f.text_.clear();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) f.text_ += ' ';
        f.text_ += comps[i].text;
        f.sigma_ = checked_mul(f.sigma_, comps[i].sigma);
    }
    f.graph_ = parse_graph(f.text_);
    f.root_count_ = f.graph_.root_count();
    return f;
}

DirectedGraph parse_graph(std::string_view text) { return GraphParser(text).parse(); }

AromaticForest parse(std::string_view text) { return canonicalize(parse_graph(text)); }

std::string render(const AromaticForest& forest) { return forest.text(); }

std::uint64_t sigma(const AromaticForest& forest) { return forest.sigma(); }

// ---------------------------------------------------------------------------
// Classes

ForestClass classify(const AromaticForest& forest)
{
    const std::size_t comps =
        forest.is_unit() ? 0 : static_cast<std::size_t>(std::count(forest.text().begin(), forest.text().end(), ' ')) + 1;
    ForestClass c;
    c.is_rootless = forest.root_count() == 0;
    c.is_connected_rootless = c.is_rootless && comps == 1;
    c.is_aromatic_tree = forest.root_count() == 1;
    c.is_rooted_tree = c.is_aromatic_tree && comps == 1;
    c.is_loopless_forest = comps == forest.root_count();
    return c;
}

bool matches(ForestFilter filter, const AromaticForest& forest)
{
    const auto c = classify(forest);
    switch (filter) {
    case ForestFilter::AF: return true;
    case ForestFilter::AT: return c.is_aromatic_tree;
    case ForestFilter::T: return c.is_rooted_tree;
    case ForestFilter::A: return c.is_rootless;
    case ForestFilter::AConnected: return c.is_connected_rootless;
    case ForestFilter::F: return c.is_loopless_forest;
    }
    return false;
}

ForestFilter parse_filter(std::string_view name)
{
    if (name == "AF") return ForestFilter::AF;
    if (name == "AT") return ForestFilter::AT;
    if (name == "T") return ForestFilter::T;
    if (name == "A") return ForestFilter::A;
    if (name == "A'" || name == "Ac") return ForestFilter::AConnected;
    if (name == "F") return ForestFilter::F;
    throw std::invalid_argument("unknown forest class '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Automorphisms (exhaustive backtracking)

std::vector<std::vector<int>> automorphisms(const AromaticForest& forest, std::size_t size_bound)
{
    const std::size_t n = forest.size();
    if (n > size_bound)
        throw std::length_error("automorphism search limited to " + std::to_string(size_bound) + " vertices, forest has " +
                                std::to_string(n));
    const auto& succ = forest.graph().successors();
    const auto preds = forest.graph().predecessors();

    std::vector<std::vector<int>> out;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);

    // A bijection with image(E) subset of E already has image(E) == E.
    auto consistent = [&](std::size_t v) {
        for (std::size_t u = 0; u <= v; ++u) {
            const int s = succ[u];
            if (s < 0 || static_cast<std::size_t>(s) > v) continue;
            if (succ[static_cast<std::size_t>(image[u])] != image[static_cast<std::size_t>(s)]) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> assign = [&](std::size_t v) {
        if (v == n) {
            out.push_back(image);
            return;
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || (succ[v] < 0) != (succ[w] < 0) || preds[v].size() != preds[w].size()) continue;
            image[v] = static_cast<int>(w);
            used[w] = true;
            if (consistent(v)) assign(v + 1);
            used[w] = false;
        }
        image[v] = -1;
    };
    assign(0);
    return out;
}

// ---------------------------------------------------------------------------
// Surgery

AromaticForest concat(const AromaticForest& a, const AromaticForest& b)
{
    auto succ = a.graph().successors();
    const int offset = static_cast<int>(succ.size());
    for (int s : b.graph().successors()) succ.push_back(s < 0 ? -1 : s + offset);
    return canonicalize(DirectedGraph::from_successors(std::move(succ)));
}

AromaticForest delete_out_edge(const AromaticForest& forest, int v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= forest.size()) throw std::invalid_argument("vertex out of range");
    auto succ = forest.graph().successors();
    if (succ[static_cast<std::size_t>(v)] < 0)
        throw std::invalid_argument("vertex " + std::to_string(v) + " is a root and has no outgoing edge");
    succ[static_cast<std::size_t>(v)] = -1;
    return canonicalize(DirectedGraph::from_successors(std::move(succ)));
}

AromaticForest induced_forest(const DirectedGraph& g, std::uint64_t mask)
{
    std::vector<int> new_id(g.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (mask >> v & 1U) new_id[v] = next++;
    std::vector<int> succ(static_cast<std::size_t>(next), -1);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (new_id[v] < 0) continue;
        const int s = g.successors()[v];
        if (s >= 0 && new_id[static_cast<std::size_t>(s)] >= 0)
            succ[static_cast<std::size_t>(new_id[v])] = new_id[static_cast<std::size_t>(s)];
    }
    return canonicalize(DirectedGraph::from_successors(std::move(succ)));
}

bool graded_less(const AromaticForest& a, const AromaticForest& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    const auto ca = std::count(a.text().begin(), a.text().end(), ' ');
    const auto cb = std::count(b.text().begin(), b.text().end(), ' ');
    if (ca != cb) return ca < cb;
    return a.text() < b.text();
}

}  // namespace aromatic
