#include "aromatic/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aromatic/coeff_json.hpp"
#include "aromatic/elemental.hpp"
#include "aromatic/integrator.hpp"
#include "aromatic/substitution.hpp"
#include "aromatic/sweeps.hpp"

namespace aromatic {

namespace {

std::size_t order_of(std::optional<std::size_t> requested, std::initializer_list<const CoeffMap*> maps)
{
    std::size_t order = SIZE_MAX;
    for (const auto* m : maps) order = std::min(order, m->order());
    if (!requested) return order;
    if (*requested > order)
        throw std::invalid_argument("truncation-order mismatch: requested order " + std::to_string(*requested) +
                                    " exceeds input order " + std::to_string(order));
    return *requested;
}

void print_table(int which, std::size_t max_size, std::ostream& out)
{
    if (which == 1) {
        for (const auto& phi : enumerate_up_to(max_size, ForestFilter::AF))
            if (phi.is_unit() || phi.components().size() == 1) out << phi.text() << " = " << render(coproduct(phi)) << '\n';
        return;
    }
    const auto filter = which == 2 ? ForestFilter::AT : ForestFilter::A;
    for (const auto& phi : enumerate_up_to(max_size, filter))
        out << phi.text() << " = " << star_product_symbolic(phi).to_string() << '\n';
}

int print_report(const SweepReport& report, std::ostream& out)
{
    for (const auto& o : report.outcomes) {
        out << (o.result ? "PASS " : "FAIL ") << o.instance << '\n';
        if (!o.result) out << "  lhs: " << o.result.lhs << "\n  rhs: " << o.result.rhs << '\n';
    }
    out << report.outcomes.size() << " instances, " << report.failures() << " failures\n";
    return report.failures() == 0 ? 0 : 1;
}

std::string format_double(double x)
{
    std::ostringstream s;
    s << std::setprecision(10) << x;
    return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact algebra of aromatic forests and B-series", "aromatic"};
    app.require_subcommand(1);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List canonical forests of one size and class");
    std::size_t size = 0;
    std::string klass = "AF";
    enumerate_cmd->add_option("--size", size, "Vertex count")->required();
    enumerate_cmd->add_option("--class", klass, "AF, AT, T, A, A' or F")->capture_default_str();

    std::string forest_text;
    auto* sigma_cmd = app.add_subcommand("sigma", "Order of the automorphism group");
    sigma_cmd->add_option("FOREST", forest_text)->required();

    auto* coproduct_cmd = app.add_subcommand("coproduct", "Coproduct as a sum of tensor pairs");
    coproduct_cmd->add_option("FOREST", forest_text)->required();

    std::string left_path, right_path, b_path, a_path;
    std::optional<std::size_t> order;
    auto* compose_cmd = app.add_subcommand("compose", "Composition product left.right of two coefficient maps");
    compose_cmd->add_option("--left", left_path)->required()->check(CLI::ExistingFile);
    compose_cmd->add_option("--right", right_path)->required()->check(CLI::ExistingFile);
    compose_cmd->add_option("--order", order);

    auto* substitute_cmd = app.add_subcommand("substitute", "Substitution law b * a, numeric or symbolic");
    auto* b_opt = substitute_cmd->add_option("--b", b_path)->check(CLI::ExistingFile);
    auto* a_opt = substitute_cmd->add_option("--a", a_path)->check(CLI::ExistingFile);
    substitute_cmd->add_option("--order", order);
    auto* symbolic_opt = substitute_cmd->add_option("--symbolic", forest_text, "Forest to expand symbolically");
    symbolic_opt->excludes(b_opt)->excludes(a_opt);
    b_opt->needs(a_opt);
    a_opt->needs(b_opt);

    auto* divergence_cmd = app.add_subcommand("divergence", "Divergence of an aromatic-tree map");
    divergence_cmd->add_option("--b", b_path)->required()->check(CLI::ExistingFile);
    divergence_cmd->add_option("--order", order);

    int which = 1;
    std::size_t max_size = 4;
    auto* tables_cmd = app.add_subcommand("tables", "Regenerate the coproduct and substitution tables");
    tables_cmd->add_option("--which", which)->check(CLI::IsMember({1, 2, 3}))->capture_default_str();
    tables_cmd->add_option("--max-size", max_size)->capture_default_str();

    SweepConfig sweep;
    std::optional<std::size_t> verify_size, instances;
    auto* verify_cmd = app.add_subcommand("verify", "Exact identity sweeps on random polynomial fields");
    auto* lemma_flag = verify_cmd->add_flag("--composition-lemma,--lemma31", "Operators of composed forests");
    auto* comp_flag = verify_cmd->add_flag("--composition-theorem,--thm41", "Composition of S-series");
    auto* map_flag = verify_cmd->add_flag("--sseries-of-map,--thm42", "Taylor expansion of G(y + B_f(a))");
    auto* subst_flag = verify_cmd->add_flag("--substitution-theorem,--thm53", "Substitution of B-series");
    verify_cmd->add_option("--max-size", verify_size, "Total size (lemma) or truncation order (theorems)");
    verify_cmd->add_option("--seed", sweep.seed)->capture_default_str();
    verify_cmd->add_option("--instances", instances, "Random instances (theorems)");
    verify_cmd->add_option("--dimension", sweep.dimension)->capture_default_str()->check(CLI::Range(1, 8));

    std::string field_name, preprocess = "off";
    double hmin = 0.02, hmax = 0.2;
    std::size_t steps = 5;
    bool slope = false, trajectory = false;
    auto* integrate_cmd = app.add_subcommand("integrate", "Midpoint volume-error experiment, CSV output");
    integrate_cmd->add_option("--field", field_name)->required()->check(CLI::IsMember(field_names()));
    integrate_cmd->add_option("--preprocess", preprocess)->check(CLI::IsMember({"on", "off", "both"}))->capture_default_str();
    integrate_cmd->add_option("--hmin", hmin)->capture_default_str();
    integrate_cmd->add_option("--hmax", hmax)->capture_default_str();
    integrate_cmd->add_option("--steps", steps, "Number of step sizes")->capture_default_str();
    integrate_cmd->add_flag("--slope", slope, "Append a JSON line with the fitted slope");
    integrate_cmd->add_flag("--trajectory", trajectory, "Report trajectory error at T = 1 instead of volume error");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enumerate_cmd) {
            for (const auto& phi : enumerate(size, parse_filter(klass))) out << phi.text() << '\n';
        } else if (*sigma_cmd) {
            out << parse(forest_text).sigma() << '\n';
        } else if (*coproduct_cmd) {
            out << render(coproduct(parse(forest_text))) << '\n';
        } else if (*compose_cmd) {
            const auto left = read_coeff_map(left_path), right = read_coeff_map(right_path);
            out << to_json(comp_product(left, right, order_of(order, {&left, &right}))) << '\n';
        } else if (*substitute_cmd) {
            if (*symbolic_opt) {
                out << star_product_symbolic(parse(forest_text)).to_string() << '\n';
            } else if (*b_opt) {
                const auto b = read_coeff_map(b_path), a = read_coeff_map(a_path);
                out << to_json(star_product(b, a, order_of(order, {&b, &a}))) << '\n';
            } else {
                err << "substitute: give --b and --a, or --symbolic FOREST\n";
                return 2;
            }
        } else if (*divergence_cmd) {
            const auto b = read_coeff_map(b_path);
            out << to_json(divergence(b, order_of(order, {&b}))) << '\n';
        } else if (*tables_cmd) {
            print_table(which, max_size, out);
        } else if (*verify_cmd) {
            const int chosen = static_cast<int>(lemma_flag->count() > 0) + static_cast<int>(comp_flag->count() > 0) +
                               static_cast<int>(map_flag->count() > 0) + static_cast<int>(subst_flag->count() > 0);
            if (chosen != 1) {
                err << "verify: choose exactly one identity to check\n";
                return 2;
            }
            if (lemma_flag->count()) {
                sweep.max_size = verify_size.value_or(5);
                return print_report(sweep_composition_lemma(sweep), out);
            }
            sweep.order = verify_size.value_or(3);
            if (comp_flag->count()) {
                sweep.instances = instances.value_or(20);
                return print_report(sweep_composition_theorem(sweep), out);
            }
            sweep.instances = instances.value_or(10);
            if (map_flag->count()) return print_report(sweep_sseries_of_map(sweep), out);
            return print_report(sweep_substitution_theorem(sweep), out);
        } else if (*integrate_cmd) {
            const auto named = named_field(field_name);
            const auto hs = step_sizes(hmin, hmax, steps);
            std::vector<bool> variants;
            if (preprocess != "on") variants.push_back(false);
            if (preprocess != "off") variants.push_back(true);
            std::vector<ExperimentResult> results;
            for (bool p : variants)
                results.push_back(trajectory ? trajectory_error_experiment(named.field, named.start, hs, p, 1.0)
                                             : volume_error_experiment(named.field, named.start, hs, p));
            out << (trajectory ? "h,trajectory_error,preprocessed\n" : "h,volume_error,preprocessed\n");
            for (const auto& r : results)
                for (std::size_t i = 0; i < r.h.size(); ++i)
                    out << format_double(r.h[i]) << ',' << format_double(r.error[i]) << ','
                        << (r.preprocessed ? "on" : "off") << '\n';
            if (slope)
                for (const auto& r : results) {
                    nlohmann::ordered_json line;
                    line["field"] = field_name;
                    line["preprocessed"] = r.preprocessed;
                    line["metric"] = trajectory ? "trajectory" : "volume";
                    line["degenerate"] = r.degenerate;
                    line["slope"] = r.degenerate ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.slope);
                    out << line.dump() << '\n';
                }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace aromatic
