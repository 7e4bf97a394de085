#include <cctype>
#include <algorithm>
#include <stdexcept>

#include "aromatic/substitution.hpp"

namespace aromatic {

void SymbolicPolynomial::add(const Monomial& m, std::int64_t coefficient)
{
    auto& slot = terms_[m];
    slot += coefficient;
    if (slot == 0) terms_.erase(m);
}

std::string SymbolicPolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::vector<std::string> rendered;
    for (const auto& [m, c] : terms_) {
        std::string t;
        if (c != 1 || m.empty()) t = std::to_string(c);
        for (const auto& [symbol, e] : m) {
            if (!t.empty()) t += '*';
            t += symbol;
            if (e != 1) t += "^" + std::to_string(e);
        }
        rendered.push_back(std::move(t));
    }
    std::sort(rendered.begin(), rendered.end());
    std::string out;
    for (const auto& t : rendered) {
        if (!out.empty()) out += " + ";
        out += t;
    }
    return out;
}

SymbolicPolynomial SymbolicPolynomial::parse(std::string_view text)
{
    SymbolicPolynomial poly;
    if (text == "0") return poly;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(" + ", pos);
        if (end == std::string_view::npos) end = text.size();
        const auto term = text.substr(pos, end - pos);
        if (term.empty()) throw ParseError("empty symbolic term", pos);

        std::int64_t coefficient = 1;
        Monomial m;
        std::size_t i = 0;
        if (std::isdigit(static_cast<unsigned char>(term[0])) || term[0] == '-') {
            const auto star = term.find('*');
            coefficient = std::stoll(std::string(term.substr(0, star)));
            i = star == std::string_view::npos ? term.size() : star + 1;
        }
        while (i < term.size()) {
            const char letter = term[i];
            const auto close = term.find(')', i);
            if ((letter != 'a' && letter != 'b') || i + 1 >= term.size() || term[i + 1] != '(' ||
                close == std::string_view::npos)
                throw ParseError("expected a(FOREST) or b(FOREST) in '" + std::string(term) + "'", pos + i);
            const auto forest = aromatic::parse(term.substr(i + 2, close - i - 2));
            int exponent = 1;
            i = close + 1;
            if (i < term.size() && term[i] == '^') {
                const auto star = term.find('*', i);
                exponent = std::stoi(std::string(term.substr(i + 1, star - i - 1)));
                i = star == std::string_view::npos ? term.size() : star;
            }
            if (i < term.size()) {
                if (term[i] != '*') throw ParseError("expected '*' in '" + std::string(term) + "'", pos + i);
                ++i;
            }
            m[std::string(1, letter) + "(" + forest.text() + ")"] += exponent;
        }
        poly.add(m, coefficient);
        if (end == text.size()) break;
        pos = end + 3;
    }
    return poly;
}

}  // namespace aromatic
