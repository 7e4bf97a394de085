#include "aromatic/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace aromatic {

namespace {

constexpr unsigned bits = 8;
constexpr PolyScalar::Key mask = 0xFF;

int exponent_of(PolyScalar::Key key, std::size_t i) { return static_cast<int>(key >> (bits * i) & mask); }

void require_same_dimension(const PolyScalar& a, const PolyScalar& b)
{
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                                    std::to_string(b.dimension()));
}

}  // namespace

PolyScalar::PolyScalar(std::size_t dimension) : dimension_(dimension)
{
    if (dimension > max_dimension) throw std::invalid_argument("polynomials support at most 8 variables");
}

PolyScalar PolyScalar::constant(std::size_t dimension, const Rational& c)
{
    PolyScalar p(dimension);
    p.add_key(0, c);
    return p;
}

PolyScalar PolyScalar::variable(std::size_t dimension, std::size_t index)
{
    if (index >= dimension) throw std::invalid_argument("variable index out of range");
    PolyScalar p(dimension);
    p.add_key(Key{1} << (bits * index), 1);
    return p;
}

int PolyScalar::total_degree() const
{
    int best = terms_.empty() ? -1 : 0;
    for (const auto& [key, c] : terms_) {
        int d = 0;
        for (std::size_t i = 0; i < dimension_; ++i) d += exponent_of(key, i);
        best = std::max(best, d);
    }
    return best;
}

void PolyScalar::add_key(Key key, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void PolyScalar::add_term(std::span<const int> exponents, const Rational& c)
{
    if (exponents.size() != dimension_) throw std::invalid_argument("exponent vector has wrong length");
    Key key = 0;
    for (std::size_t i = 0; i < dimension_; ++i) {
        if (exponents[i] < 0 || exponents[i] > static_cast<int>(mask)) throw std::out_of_range("exponent out of range");
        key |= static_cast<Key>(exponents[i]) << (bits * i);
    }
    add_key(key, c);
}

std::vector<int> PolyScalar::exponents(Key key) const
{
    std::vector<int> e(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) e[i] = exponent_of(key, i);
    return e;
}

PolyScalar PolyScalar::derivative(std::size_t index) const
{
    if (index >= dimension_) throw std::invalid_argument("derivative index out of range");
    PolyScalar d(dimension_);
    const Key unit = Key{1} << (bits * index);
    for (const auto& [key, c] : terms_) {
        const int e = exponent_of(key, index);
        if (e == 0) continue;
        d.terms_.emplace_hint(d.terms_.end(), key - unit, c * e);
    }
    return d;
}

Rational PolyScalar::evaluate(std::span<const Rational> point) const
{
    if (point.size() != dimension_) throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& [key, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < dimension_; ++i)
            for (int k = 0; k < exponent_of(key, i); ++k) t *= point[i];
        sum += t;
    }
    return sum;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& other)
{
    require_same_dimension(*this, other);
    for (const auto& [key, c] : other.terms_) add_key(key, c);
    return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& other)
{
    require_same_dimension(*this, other);
    for (const auto& [key, c] : other.terms_) add_key(key, -c);
    return *this;
}

PolyScalar& PolyScalar::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b)
{
    require_same_dimension(a, b);
    PolyScalar out(a.dimension());
    if (a.is_zero() || b.is_zero()) return out;
    if (a.total_degree() + b.total_degree() > static_cast<int>(mask))
        throw std::overflow_error("polynomial degree exceeds 255");
    Rational t;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            out.add_key(ka + kb, t);
        }
    return out;
}

std::string PolyScalar::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    // Highest keys first reads as descending powers of the last variable.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        if (!out.empty()) out += " + ";
        std::string monomial;
        for (std::size_t i = 0; i < dimension_; ++i) {
            const int e = exponent_of(key, i);
            if (e == 0) continue;
            monomial += "*x" + std::to_string(i + 1);
            if (e > 1) monomial += "^" + std::to_string(e);
        }
        if (monomial.empty())
            out += c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
        else if (c == 1 || c == -1)
            out += (c < 0 ? "-" : "") + monomial.substr(1);
        else
            out += (c.get_den() == 1 ? c.get_num().get_str() : c.get_str()) + monomial;
    }
    return out;
}

PolyScalar PolyScalar::parse(std::string_view text, std::size_t dimension)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    PolyScalar p(dimension);
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("polynomial '" + std::string(text) + "': " + what + " at position " +
                                    std::to_string(pos));
    };
    auto read_uint = [&]() {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return s.substr(start, pos - start);
    };

    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            // "+ -3*x1" renders negative coefficients after a plus.
            if (pos < s.size() && s[pos] == '-') {
                sign = -sign;
                ++pos;
            }
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;

        Rational coefficient = 1;
        bool have_factor = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::string num = read_uint();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                num += "/" + read_uint();
            }
            coefficient = parse_rational(num);
            have_factor = true;
        }
        std::vector<int> e(dimension, 0);
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (have_factor) {
                if (s[pos] != '*') fail("expected '*'");
                ++pos;
            }
            if (pos >= s.size() || s[pos] != 'x') fail("expected a variable x<k>");
            ++pos;
            const auto index = std::stoul(read_uint());
            if (index < 1 || index > dimension) fail("variable index out of range");
            int power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                power = std::stoi(read_uint());
            }
            e[index - 1] += power;
            have_factor = true;
        }
        if (!have_factor) fail("empty term");
        p.add_term(e, sign * coefficient);
    }
    return p;
}

// ---------------------------------------------------------------------------

PolyVecField::PolyVecField(std::vector<PolyScalar> components) : components_(std::move(components))
{
    for (const auto& c : components_)
        if (c.dimension() != components_.size())
            throw std::invalid_argument("vector field components must live in the field's own dimension");
}

PolyVecField PolyVecField::zero(std::size_t dimension)
{
    return PolyVecField(std::vector<PolyScalar>(dimension, PolyScalar(dimension)));
}

PolyVecField PolyVecField::parse(const std::vector<std::string>& components)
{
    std::vector<PolyScalar> parsed;
    for (const auto& c : components) parsed.push_back(PolyScalar::parse(c, components.size()));
    return PolyVecField(std::move(parsed));
}

bool PolyVecField::is_zero() const
{
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

PolyVecField& PolyVecField::operator+=(const PolyVecField& other)
{
    if (other.dimension() != dimension()) throw std::invalid_argument("vector field dimension mismatch");
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
    return *this;
}

PolyVecField& PolyVecField::operator*=(const Rational& c)
{
    for (auto& comp : components_) comp *= c;
    return *this;
}

std::string PolyVecField::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += ", ";
        out += components_[i].to_string();
    }
    return out + ")";
}

}  // namespace aromatic
