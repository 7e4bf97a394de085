#include "aromatic/forest.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace aromatic {

namespace {

struct Piece {
    std::string text;
    std::size_t size;
};

// Multisets drawn from `pool` (sorted by text) with total size `n`; each
// multiset is reported as its members' texts in nondecreasing pool order.
void multisets(const std::vector<Piece>& pool, std::size_t n, std::size_t first, std::vector<const Piece*>& chosen,
               const std::function<void(const std::vector<const Piece*>&)>& emit)
{
    if (n == 0) {
        emit(chosen);
        return;
    }
    for (std::size_t i = first; i < pool.size(); ++i) {
        if (pool[i].size > n) continue;
        chosen.push_back(&pool[i]);
        multisets(pool, n - pool[i].size, i, chosen, emit);
        chosen.pop_back();
    }
}

std::string min_rotation(const std::vector<std::string>& seq)
{
    std::string best;
    for (std::size_t s = 0; s < seq.size(); ++s) {
        std::string text = "<";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) text += ',';
            text += seq[(s + i) % seq.size()];
        }
        text += '>';
        if (s == 0 || text < best) best = std::move(text);
    }
    return best;
}

class Generator {
public:
    explicit Generator(std::size_t max_size) : trees_(max_size + 1), aromas_(max_size + 1)
    {
        for (std::size_t n = 1; n <= max_size; ++n) {
            build_trees(n);
            build_aromas(n);
        }
    }

    std::vector<std::string> forests(std::size_t n, bool with_trees, bool with_aromas) const
    {
        std::vector<Piece> pool;
        for (std::size_t k = 1; k <= n; ++k) {
            if (with_trees)
                for (const auto& t : trees_[k]) pool.push_back({t, k});
            if (with_aromas)
                for (const auto& a : aromas_[k]) pool.push_back({a, k});
        }
        std::sort(pool.begin(), pool.end(), [](const Piece& a, const Piece& b) { return a.text < b.text; });
        std::vector<std::string> out;
        if (n == 0) return {"1"};
        std::vector<const Piece*> chosen;
        multisets(pool, n, 0, chosen, [&](const std::vector<const Piece*>& parts) {
            std::string text;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) text += ' ';
                text += parts[i]->text;
            }
            out.push_back(std::move(text));
        });
        return out;
    }

    const std::vector<std::string>& trees(std::size_t n) const { return trees_[n]; }
    const std::vector<std::string>& aromas(std::size_t n) const { return aromas_[n]; }

private:
    void build_trees(std::size_t n)
    {
        if (n == 1) {
            trees_[1] = {"b"};
            return;
        }
        std::vector<Piece> pool;
        for (std::size_t k = 1; k < n; ++k)
            for (const auto& t : trees_[k]) pool.push_back({t, k});
        std::sort(pool.begin(), pool.end(), [](const Piece& a, const Piece& b) { return a.text < b.text; });
        std::vector<const Piece*> chosen;
        multisets(pool, n - 1, 0, chosen, [&](const std::vector<const Piece*>& kids) {
            std::string text = "b[";
            for (std::size_t i = 0; i < kids.size(); ++i) {
                if (i) text += ',';
                text += kids[i]->text;
            }
            trees_[n].push_back(text + "]");
        });
        std::sort(trees_[n].begin(), trees_[n].end());
    }

    // Cycles of k >= 1 trees with total size n, up to rotation.
    void build_aromas(std::size_t n)
    {
        std::set<std::string> found;
        std::vector<std::string> seq;
        std::function<void(std::size_t)> extend = [&](std::size_t left) {
            if (left == 0) {
                found.insert(min_rotation(seq));
                return;
            }
            for (std::size_t k = 1; k <= left; ++k)
                for (const auto& t : trees_[k]) {
                    seq.push_back(t);
                    extend(left - k);
                    seq.pop_back();
                }
        };
        extend(n);
        aromas_[n].assign(found.begin(), found.end());
    }

    std::vector<std::vector<std::string>> trees_;
    std::vector<std::vector<std::string>> aromas_;
};

}  // namespace

std::vector<AromaticForest> enumerate(std::size_t n, ForestFilter filter)
{
    Generator gen(n);
    std::vector<std::string> texts;
    switch (filter) {
    case ForestFilter::T:
        texts = n == 0 ? std::vector<std::string>{} : gen.trees(n);
        break;
    case ForestFilter::AConnected:
        texts = n == 0 ? std::vector<std::string>{} : gen.aromas(n);
        break;
    case ForestFilter::A:
        texts = gen.forests(n, false, true);
        break;
    case ForestFilter::F:
        texts = gen.forests(n, true, false);
        break;
    case ForestFilter::AF:
    case ForestFilter::AT:
        texts = gen.forests(n, true, true);
        break;
    }
    std::vector<AromaticForest> out;
    out.reserve(texts.size());
    for (const auto& t : texts) {
        auto f = parse(t);
        if (matches(filter, f)) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

std::vector<AromaticForest> enumerate_up_to(std::size_t max_size, ForestFilter filter)
{
    std::vector<AromaticForest> out;
    for (std::size_t k = 0; k <= max_size; ++k) {
        auto level = enumerate(k, filter);
        out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
}

}  // namespace aromatic
