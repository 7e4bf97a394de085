#include "aromatic/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace aromatic {

std::string_view to_string(Domain d)
{
    switch (d) {
    case Domain::AF: return "AF";
    case Domain::AT: return "AT";
    case Domain::A: return "A";
    }
    return "?";
}

Domain parse_domain(std::string_view name)
{
    if (name == "AF") return Domain::AF;
    if (name == "AT") return Domain::AT;
    if (name == "A") return Domain::A;
    throw std::invalid_argument("unknown coefficient domain '" + std::string(name) + "'");
}

bool in_domain(Domain d, const AromaticForest& forest)
{
    switch (d) {
    case Domain::AF: return true;
    case Domain::AT: return forest.root_count() == 1;
    case Domain::A: return forest.root_count() == 0;
    }
    return false;
}

// ---------------------------------------------------------------------------
// CoeffMap

CoeffMap::CoeffMap(Domain domain, std::size_t order) : domain_(domain), order_(order) {}

Rational CoeffMap::operator()(const AromaticForest& forest) const
{
    if (forest.size() > order_)
        throw std::out_of_range("coefficient of '" + forest.text() + "' lies above truncation order " +
                                std::to_string(order_));
    auto it = entries_.find(forest);
    return it == entries_.end() ? Rational(0) : it->second;
}

void CoeffMap::set(const AromaticForest& forest, const Rational& value)
{
    if (forest.size() > order_)
        throw std::out_of_range("cannot store '" + forest.text() + "' above truncation order " +
                                std::to_string(order_));
    if (!in_domain(domain_, forest))
        throw std::invalid_argument("forest '" + forest.text() + "' is outside domain " +
                                    std::string(to_string(domain_)));
    if (value == 0)
        entries_.erase(forest);
    else
        entries_[forest] = value;
}

void CoeffMap::add(const AromaticForest& forest, const Rational& value) { set(forest, (*this)(forest) + value); }

CoeffMap CoeffMap::truncated(std::size_t order) const
{
    CoeffMap out(domain_, order);
    for (const auto& [f, v] : entries_)
        if (f.size() <= order) out.entries_.emplace(f, v);
    return out;
}

CoeffMap epsilon(Domain domain, std::size_t order)
{
    CoeffMap e(domain, order);
    e.set(AromaticForest{}, 1);
    return e;
}

CoeffMap dual_basis(const AromaticForest& forest, Domain domain, std::size_t order)
{
    CoeffMap e(domain, order);
    e.set(forest, 1);
    return e;
}

// ---------------------------------------------------------------------------
// Formal sums

void TensorSum::add(const AromaticForest& left, const AromaticForest& right, std::int64_t m)
{
    auto key = std::make_pair(left, right);
    auto& slot = terms[key];
    slot += m;
    if (slot == 0) terms.erase(key);
}

void FormalSum::add(const AromaticForest& forest, std::int64_t m)
{
    auto& slot = terms[forest];
    slot += m;
    if (slot == 0) terms.erase(forest);
}

std::string render(const TensorSum& sum)
{
    if (sum.terms.empty()) return "0";
    std::string out;
    for (const auto& [pair, m] : sum.terms) {
        if (!out.empty()) out += " + ";
        out += std::to_string(m) + "*(" + pair.first.text() + "|" + pair.second.text() + ")";
    }
    return out;
}

TensorSum parse_tensor_sum(std::string_view text)
{
    // Accepts "m*(L|R)" and "m * (L | R)" terms joined by '+'.
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    TensorSum sum;
    if (trim(text) == "0") return sum;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('+', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto term = trim(text.substr(pos, end - pos));
        const auto star = term.find('*');
        const auto open = term.find('(');
        const auto bar = term.find('|');
        if (star == std::string_view::npos || open == std::string_view::npos || bar == std::string_view::npos ||
            term.empty() || term.back() != ')' || !(star < open && open < bar) || !trim(term.substr(star + 1, open - star - 1)).empty())
            throw ParseError("malformed tensor term '" + std::string(term) + "'", pos);
        const auto m = std::stoll(std::string(trim(term.substr(0, star))));
        sum.add(parse(trim(term.substr(open + 1, bar - open - 1))), parse(trim(term.substr(bar + 1, term.size() - bar - 2))), m);
        pos = end + 1;
    }
    return sum;
}

std::string render(const FormalSum& sum)
{
    if (sum.terms.empty()) return "0";
    std::string out;
    for (const auto& [f, m] : sum.terms) {
        if (!out.empty()) out += " + ";
        out += std::to_string(m) + "*" + f.text();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coproduct

std::vector<AdmissiblePartition> admissible_partitions(const AromaticForest& forest)
{
    const std::size_t n = forest.size();
    if (n > 30) throw std::length_error("admissible partition enumeration limited to 30 vertices");
    const auto& succ = forest.graph().successors();
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;

    std::vector<AdmissiblePartition> out;
    for (std::uint64_t right = 0; right <= all; ++right) {
        bool closed = true;
        for (std::size_t v = 0; v < n && closed; ++v)
            if ((right >> v & 1U) && succ[v] >= 0 && !(right >> succ[v] & 1U)) closed = false;
        if (!closed) continue;
        out.push_back({induced_forest(forest.graph(), all & ~right), induced_forest(forest.graph(), right), right});
    }
    return out;
}

TensorSum coproduct(const AromaticForest& forest)
{
    TensorSum sum;
    for (const auto& p : admissible_partitions(forest)) sum.add(p.left, p.right, 1);
    return sum;
}

TensorSum reduced_coproduct(const AromaticForest& forest)
{
    if (forest.is_unit()) throw std::invalid_argument("reduced coproduct is not defined on the unit");
    auto sum = coproduct(forest);
    sum.add(AromaticForest{}, forest, -1);
    sum.add(forest, AromaticForest{}, -1);
    return sum;
}

// ---------------------------------------------------------------------------
// Composition law

CoeffMap comp_product(const CoeffMap& b, const CoeffMap& a, std::size_t order)
{
    if (b.order() < order || a.order() < order)
        throw std::invalid_argument("truncation-order mismatch: inputs have orders " + std::to_string(b.order()) +
                                    " and " + std::to_string(a.order()) + ", requested " + std::to_string(order));
    CoeffMap out(Domain::AF, order);
    for (const auto& phi : enumerate_up_to(order, ForestFilter::AF)) {
        Rational value = 0;
        for (const auto& [pair, m] : coproduct(phi).terms) value += m * b(pair.first) * a(pair.second);
        out.set(phi, value);
    }
    return out;
}

CoeffMap comp_inverse(const CoeffMap& a, std::size_t order)
{
    if (a.order() < order) throw std::invalid_argument("truncation-order mismatch in comp_inverse");
    const AromaticForest unit;
    const Rational a1 = a(unit);
    if (a1 == 0) throw std::domain_error("map with a(1) = 0 has no composition inverse");

    CoeffMap inv(Domain::AF, order);
    inv.set(unit, 1 / a1);
    // a(1) inv(phi) + a(phi) inv(1) + sum' a(phi') inv(phi'') = 0
    for (const auto& phi : enumerate_up_to(order, ForestFilter::AF)) {
        if (phi.is_unit()) continue;
        Rational acc = a(phi) * inv(unit);
        for (const auto& [pair, m] : reduced_coproduct(phi).terms) acc += m * a(pair.first) * inv(pair.second);
        inv.set(phi, -acc / a1);
    }
    return inv;
}

namespace {

FormalSum antipode_memo(const AromaticForest& forest, std::map<AromaticForest, FormalSum>& memo)
{
    if (auto it = memo.find(forest); it != memo.end()) return it->second;
    FormalSum s;
    if (forest.is_unit()) {
        s.add(forest, 1);
    } else {
        s.add(forest, -1);
        for (const auto& [pair, m] : reduced_coproduct(forest).terms) {
            const auto left = antipode_memo(pair.first, memo);
            for (const auto& [f, c] : left.terms) s.add(concat(f, pair.second), -m * c);
        }
    }
    memo.emplace(forest, s);
    return s;
}

}  // namespace

FormalSum antipode(const AromaticForest& forest)
{
    std::map<AromaticForest, FormalSum> memo;
    return antipode_memo(forest, memo);
}

FormalSum graph_composition(const AromaticForest& phi1, const AromaticForest& phi2)
{
    const auto& s1 = phi1.graph().successors();
    const auto& s2 = phi2.graph().successors();
    const int n1 = static_cast<int>(s1.size());
    const int n2 = static_cast<int>(s2.size());

    std::vector<int> roots;
    for (int v = 0; v < n1; ++v)
        if (s1[static_cast<std::size_t>(v)] < 0) roots.push_back(v);

    std::vector<int> base = s1;
    for (int s : s2) base.push_back(s < 0 ? -1 : s + n1);

    FormalSum sum;
    // rho[i] in [0, n2]; n2 stands for the dummy target (no edge).
    std::vector<int> rho(roots.size(), 0);
    while (true) {
        auto succ = base;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (rho[i] < n2) succ[static_cast<std::size_t>(roots[i])] = n1 + rho[i];
        sum.add(canonicalize(DirectedGraph::from_successors(std::move(succ))), 1);
        std::size_t i = 0;
        while (i < rho.size() && ++rho[i] > n2) rho[i++] = 0;
        if (i == rho.size()) break;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Rootless forests and the extension of aromatic-tree maps

std::vector<std::pair<AromaticForest, AromaticForest>> aroma_splittings(const AromaticForest& gamma)
{
    if (gamma.root_count() != 0) throw std::invalid_argument("'" + gamma.text() + "' is not rootless");
    const auto comps = gamma.components();
    std::vector<std::pair<AromaticForest, std::size_t>> distinct;
    for (const auto& c : comps) {
        if (!distinct.empty() && distinct.back().first == c)
            ++distinct.back().second;
        else
            distinct.emplace_back(c, 1);
    }
    std::vector<std::pair<AromaticForest, AromaticForest>> out;
    std::vector<std::size_t> take(distinct.size(), 0);
    while (true) {
        AromaticForest first;
        AromaticForest second;
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            for (std::size_t k = 0; k < take[i]; ++k) first = concat(first, distinct[i].first);
            for (std::size_t k = take[i]; k < distinct[i].second; ++k) second = concat(second, distinct[i].first);
        }
        out.emplace_back(std::move(first), std::move(second));
        std::size_t i = 0;
        while (i < take.size() && ++take[i] > distinct[i].second) take[i++] = 0;
        if (i == take.size()) break;
    }
    return out;
}

CoeffMap aroma_dual_product(const CoeffMap& a, const CoeffMap& b, std::size_t order)
{
    if (a.domain() != Domain::A || b.domain() != Domain::A)
        throw std::invalid_argument("aroma_dual_product needs maps on rootless forests");
    if (a.order() < order || b.order() < order) throw std::invalid_argument("truncation-order mismatch");
    CoeffMap out(Domain::A, order);
    for (const auto& gamma : enumerate_up_to(order, ForestFilter::A)) {
        Rational acc = 0;
        for (const auto& [g1, g2] : aroma_splittings(gamma))
            acc += a(g1) * b(g2) / Rational(g1.sigma() * g2.sigma());
        out.set(gamma, acc * Rational(gamma.sigma()));
    }
    return out;
}

std::pair<AromaticForest, std::vector<AromaticForest>> split_aroma(const AromaticForest& forest)
{
    AromaticForest gamma;
    std::vector<AromaticForest> trees;
    for (auto& c : forest.components()) {
        if (c.root_count() == 0)
            gamma = concat(gamma, c);
        else
            trees.push_back(std::move(c));
    }
    return {gamma, trees};
}

namespace {

// <a'(u_first) ... a'(u_last), gamma> with a'(u)(g) = a(g u), products in the
// dual algebra of rootless forests.
Rational dual_product_at(const CoeffMap& a, const AromaticForest& gamma, std::span<const AromaticForest> trees)
{
    if (trees.size() == 1) return a(concat(gamma, trees.front()));
    Rational acc = 0;
    for (const auto& [g1, g2] : aroma_splittings(gamma)) {
        const Rational head = a(concat(g1, trees.front()));
        if (head == 0) continue;
        acc += head * dual_product_at(a, g2, trees.subspan(1)) / Rational(g1.sigma() * g2.sigma());
    }
    return acc * Rational(gamma.sigma());
}

}  // namespace

Rational bar_extend_at(const CoeffMap& a, const AromaticForest& forest)
{
    if (a.domain() != Domain::AT) throw std::invalid_argument("bar extension needs a map on aromatic trees");
    const auto [gamma, trees] = split_aroma(forest);
    if (trees.empty()) return gamma.is_unit() ? Rational(1) : Rational(0);
    if (trees.size() == 1) return a(forest);
    return dual_product_at(a, gamma, trees);
}

CoeffMap bar_extend(const CoeffMap& a, std::size_t order)
{
    if (a.domain() != Domain::AT) throw std::invalid_argument("bar extension needs a map on aromatic trees");
    if (a.order() < order) throw std::invalid_argument("truncation-order mismatch in bar_extend");
    CoeffMap out(Domain::AF, order);
    for (const auto& phi : enumerate_up_to(order, ForestFilter::AF)) out.set(phi, bar_extend_at(a, phi));
    return out;
}

}  // namespace aromatic
