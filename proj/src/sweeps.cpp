#include "aromatic/sweeps.hpp"

#include "aromatic/substitution.hpp"

namespace aromatic {

Rational random_rational(Rng& rng)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

PolyScalar random_polynomial(std::size_t dimension, int degree, Rng& rng)
{
    PolyScalar p(dimension);
    std::vector<int> e(dimension, 0);
    // All exponent vectors with total degree <= degree, in odometer order.
    while (true) {
        p.add_term(e, random_rational(rng));
        std::size_t i = 0;
        for (; i < dimension; ++i) {
            int total = 0;
            for (int x : e) total += x;
            if (total < degree) {
                ++e[i];
                break;
            }
            e[i] = 0;
        }
        if (i == dimension) break;
    }
    return p;
}

PolyVecField random_field(std::size_t dimension, int degree, Rng& rng)
{
    std::vector<PolyScalar> components;
    for (std::size_t i = 0; i < dimension; ++i) components.push_back(random_polynomial(dimension, degree, rng));
    return PolyVecField(std::move(components));
}

CoeffMap random_coeff_map(Domain domain, std::size_t order, Rng& rng)
{
    const ForestFilter filter = domain == Domain::AF ? ForestFilter::AF
                                : domain == Domain::AT ? ForestFilter::AT
                                                       : ForestFilter::A;
    CoeffMap out(domain, order);
    for (const auto& forest : enumerate_up_to(order, filter)) {
        out.set(forest, random_rational(rng));
    }
    return out;
}

std::size_t SweepReport::failures() const
{
    std::size_t n = 0;
    for (const auto& o : outcomes)
        if (!o.result) ++n;
    return n;
}

SweepReport sweep_composition_lemma(const SweepConfig& config)
{
    Rng rng(config.seed);
    const auto f = random_field(config.dimension, 3, rng);
    const auto G = random_polynomial(config.dimension, 2, rng);
    OperatorCache cache(f, G);
    const auto forests = enumerate_up_to(config.max_size, ForestFilter::AF);
    SweepReport report;
    for (const auto& phi1 : forests)
        for (const auto& phi2 : forests) {
            if (phi1.size() + phi2.size() > config.max_size) continue;
            report.outcomes.push_back({phi1.text() + " o " + phi2.text(), verify_composition_lemma(phi1, phi2, cache)});
        }
    return report;
}

SweepReport sweep_composition_theorem(const SweepConfig& config)
{
    Rng rng(config.seed);
    SweepReport report;
    for (std::size_t k = 0; k < config.instances; ++k) {
        const auto f = random_field(config.dimension, 3, rng);
        const auto G = random_polynomial(config.dimension, 2, rng);
        const auto b = random_coeff_map(Domain::AF, config.order, rng);
        const auto a = random_coeff_map(Domain::AF, config.order, rng);
        report.outcomes.push_back(
            {"random pair " + std::to_string(k + 1), verify_composition_theorem(b, a, f, G, config.order)});
    }
    return report;
}

SweepReport sweep_sseries_of_map(const SweepConfig& config)
{
    Rng rng(config.seed);
    SweepReport report;
    for (std::size_t k = 0; k < config.instances; ++k) {
        const auto f = random_field(config.dimension, 3, rng);
        const auto G = random_polynomial(config.dimension, 2, rng);
        const auto a = random_coeff_map(Domain::AT, config.order, rng);
        auto result = verify_sseries_of_map(a, f, G, config.order);
        if (result && config.order >= 1) {
            const Rational loop = bar_extend_at(a, parse("<b>"));
            if (loop != 0) result = {false, "bar a(<b>) = " + format_rational(loop), "0"};
        }
        report.outcomes.push_back({"random map " + std::to_string(k + 1), result});
    }
    return report;
}

SweepReport sweep_substitution_theorem(const SweepConfig& config)
{
    Rng rng(config.seed);
    SweepReport report;
    std::vector<CoeffMap> bs;
    std::vector<PolyVecField> fs;
    std::vector<PolyScalar> Gs;
    for (std::size_t k = 0; k < config.instances; ++k) {
        fs.push_back(random_field(config.dimension, 3, rng));
        Gs.push_back(random_polynomial(config.dimension, 2, rng));
        bs.push_back(random_coeff_map(Domain::AT, config.order, rng));
        const auto a = random_coeff_map(Domain::AF, config.order, rng);
        report.outcomes.push_back({"random pair " + std::to_string(k + 1),
                                   verify_substitution_theorem(bs.back(), a, fs.back(), Gs.back(), config.order)});
    }
    const auto loop = dual_basis(parse("<b>"), Domain::AF, config.order);
    for (std::size_t k = 0; k < config.instances; ++k)
        report.outcomes.push_back({"a = <b>*, b = random map " + std::to_string(k + 1),
                                   verify_substitution_theorem(bs[k], loop, fs[k], Gs[k], config.order)});
    return report;
}

}  // namespace aromatic
