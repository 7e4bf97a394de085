#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aromatic/rational.hpp"

namespace aromatic {

/// Multivariate polynomial over the rationals in variables x1..xn (n <= 8,
/// each exponent < 256). Terms are kept with nonzero coefficients only.
class PolyScalar {
public:
    /// Exponents packed 8 bits per variable; variable i occupies bits 8i..8i+7.
    using Key = std::uint64_t;
    static constexpr std::size_t max_dimension = 8;

    explicit PolyScalar(std::size_t dimension = 0);
    static PolyScalar constant(std::size_t dimension, const Rational& c);
    /// The coordinate x_{index+1}.
    static PolyScalar variable(std::size_t dimension, std::size_t index);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::map<Key, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int total_degree() const;

    void add_term(std::span<const int> exponents, const Rational& c);
    std::vector<int> exponents(Key key) const;

    PolyScalar derivative(std::size_t index) const;
    Rational evaluate(std::span<const Rational> point) const;

    PolyScalar& operator+=(const PolyScalar& other);
    PolyScalar& operator-=(const PolyScalar& other);
    PolyScalar& operator*=(const Rational& c);
    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
    friend PolyScalar operator*(PolyScalar a, const Rational& c) { return a *= c; }
    friend PolyScalar operator*(const Rational& c, PolyScalar a) { return a *= c; }
    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
    friend bool operator==(const PolyScalar&, const PolyScalar&) = default;

    /// "c*x1^a*x2^b + ..." with c as "p/q" (or "p"); "0" for the zero polynomial.
    std::string to_string() const;
    /// Accepts sums/differences of terms "c*x1^a*x2" with rational c; spaces ignored.
    static PolyScalar parse(std::string_view text, std::size_t dimension);

private:
    void add_key(Key key, const Rational& c);

    std::size_t dimension_;
    std::map<Key, Rational> terms_;
};

/// Vector field with polynomial components; component count = dimension.
class PolyVecField {
public:
    PolyVecField() = default;
    explicit PolyVecField(std::vector<PolyScalar> components);
    static PolyVecField zero(std::size_t dimension);
    static PolyVecField parse(const std::vector<std::string>& components);

    std::size_t dimension() const noexcept { return components_.size(); }
    const PolyScalar& operator[](std::size_t i) const { return components_.at(i); }
    PolyScalar& operator[](std::size_t i) { return components_.at(i); }
    const std::vector<PolyScalar>& components() const noexcept { return components_; }
    bool is_zero() const;

    PolyVecField& operator+=(const PolyVecField& other);
    PolyVecField& operator*=(const Rational& c);
    friend bool operator==(const PolyVecField&, const PolyVecField&) = default;

    std::string to_string() const;

private:
    std::vector<PolyScalar> components_;
};

}  // namespace aromatic
