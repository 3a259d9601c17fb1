#include "qew/cli.hpp"

#include "qew/dp.hpp"
#include "qew/oeis.hpp"
#include "qew/parser.hpp"
#include "qew/series.hpp"
#include "qew/solver.hpp"
#include "qew/stats.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qew {

namespace {

using nlohmann::json;

std::string poly_list_str(const std::vector<HalfQPoly>& polys) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < polys.size(); ++i) {
        if (i) os << ", ";
        os << polys[i].str();
    }
    os << "]";
    return os.str();
}

json series_json(const Series& s) {
    json arr = json::array();
    for (const auto& c : s.coeffs()) arr.push_back(c.get_str());
    return arr;
}

void run_dp(std::ostream& out, const std::string& steps_text, int max_n, bool at_q1, bool as_json) {
    StepSet steps = parse_step_set(steps_text);
    std::vector<HalfQPoly> polys = area_enumerators_upto(steps, max_n);
    if (as_json) {
        json arr = json::array();
        for (int n = 0; n <= max_n; ++n) {
            if (at_q1) {
                arr.push_back({{"n", n}, {"count", polys[n].eval_q1().get_str()}});
            } else {
                json terms = json::array();
                for (const auto& [h, c] : polys[n].terms()) terms.push_back({h, c.get_str()});
                arr.push_back({{"n", n}, {"terms", terms}});
            }
        }
        out << arr.dump() << "\n";
        return;
    }
    if (at_q1) {
        std::ostringstream os;
        os << "[";
        for (int n = 0; n <= max_n; ++n) {
            if (n) os << ", ";
            os << polys[n].eval_q1().get_str();
        }
        os << "]";
        out << os.str() << "\n";
        return;
    }
    out << poly_list_str(polys) << "\n";
}

struct EquationInput {
    BiPoly P, Q, R;
};

EquationInput parse_equation(const std::string& p, const std::string& q, const std::string& r) {
    return {parse_poly_expr(p), q.empty() ? BiPoly() : parse_poly_expr(q),
            r.empty() ? BiPoly() : parse_poly_expr(r)};
}

void run_series(std::ostream& out, const EquationInput& eq, int order, bool as_json) {
    Series s = series_fixed_point_solve(eq.P.eval_q1(), eq.Q.eval_q1(), eq.R.eval_q1(), order);
    if (as_json)
        out << series_json(s).dump() << "\n";
    else
        out << s.str() << "\n";
}

void run_derive(std::ostream& out, const EquationInput& eq, int order, bool as_json, int series_order) {
    DerivationResult result = derk(eq.P, eq.Q, eq.R, order);
    if (as_json) {
        json arr = json::array();
        for (size_t k = 0; k < result.F.size(); ++k) {
            json entry = result.F[k].to_json();
            entry["k"] = k;
            arr.push_back(std::move(entry));
        }
        out << arr.dump() << "\n";
        return;
    }
    if (series_order >= 0) {
        for (size_t k = 0; k < result.F.size(); ++k)
            out << "F[" << k << "]: " << result.F[k].to_series(series_order).str() << "\n";
        return;
    }
    out << "delta = " << result.delta.str() << "\n";
    for (size_t k = 0; k < result.F.size(); ++k)
        out << "F[" << k << "] = " << result.F[k].str() << "\n";
}

void run_moments(std::ostream& out, const std::string& steps_text, const std::string& p_text,
                 const std::string& q_text, const std::string& r_text, unsigned power, int order,
                 bool as_json) {
    std::vector<BigRational> coeffs;
    if (!steps_text.empty()) {
        StepSet steps = parse_step_set(steps_text);
        coeffs = power_sum_sequence(steps, power, order);
    } else {
        EquationInput eq = parse_equation(p_text, q_text, r_text);
        DerivationResult result = derk(eq.P, eq.Q, eq.R, static_cast<int>(power));
        Series s = moment_series(result, power, order);
        coeffs = s.coeffs();
    }
    Series s{std::vector<BigRational>(coeffs)};
    if (as_json)
        out << series_json(s).dump() << "\n";
    else
        out << s.str() << "\n";
}

void run_stats(std::ostream& out, const std::string& steps_text, int max_n, bool as_json, bool growth) {
    StepSet steps = parse_step_set(steps_text);
    std::vector<StatsRow> rows = stats_sequences(steps, max_n);
    double growth_value = 0;
    if (growth) {
        std::vector<BigRational> counts;
        for (const auto& row : rows)
            if (row.a0 != 0) counts.emplace_back(row.a0);
        growth_value = growth_estimate(counts);
    }
    if (as_json) {
        json arr = json::array();
        for (const auto& row : rows) {
            json entry = {{"n", row.n},
                          {"a0", row.a0.get_str()},
                          {"a1", row.a1.get_str()},
                          {"a2", row.a2.get_str()}};
            if (row.defined) {
                entry["mean"] = row.mean.get_str();
                entry["variance"] = row.variance.get_str();
            } else {
                entry["mean"] = nullptr;
                entry["variance"] = nullptr;
            }
            arr.push_back(std::move(entry));
        }
        json doc = arr;
        if (growth) doc = {{"rows", arr}, {"growth_a0", growth_value}};
        out << doc.dump() << "\n";
        return;
    }
    out << "n\ta0\ta1\ta2\tmean\tvariance\n";
    for (const auto& row : rows) {
        out << row.n << "\t" << row.a0.get_str() << "\t" << row.a1.get_str() << "\t"
            << row.a2.get_str() << "\t";
        if (row.defined)
            out << row.mean.get_str() << "\t" << row.variance.get_str() << "\n";
        else
            out << "-\t-\n";
    }
    if (growth) out << "growth(a0) ~ " << growth_value << "\n";
}

void run_oeis(std::ostream& out, const std::string& terms_text, bool online) {
    std::vector<BigInt> terms;
    std::stringstream ss(terms_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (!tok.empty()) terms.emplace_back(tok, 10);
    }
    auto entries = oeis_lookup(terms, online);
    if (entries.empty()) {
        out << "no matches\n";
        return;
    }
    for (const auto& e : entries) out << e.id << "  " << e.name << "\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact area statistics of generalized Dyck walks"};
    app.name("qew");
    app.require_subcommand(1);

    std::string steps_text, p_text, q_text, r_text, terms_text;
    int max_n = 0, order = 0, series_order = -1;
    unsigned power = 1;
    bool at_q1 = false, as_json = false, online = false, growth = false;

    auto* dp_cmd = app.add_subcommand("dp", "area weight enumerators by dynamic programming");
    dp_cmd->add_option("--steps", steps_text, "step set literal, e.g. [[1,1],[1,0],[1,-1]]")
        ->required();
    dp_cmd->add_option("--max-n", max_n, "largest walk length")->required()->check(CLI::NonNegativeNumber);
    dp_cmd->add_flag("--at-q1", at_q1, "print walk counts instead of polynomials");
    dp_cmd->add_flag("--json", as_json);

    auto* series_cmd = app.add_subcommand("series", "power-series solution of the q=1 equation");
    series_cmd->add_option("--p", p_text, "polynomial P(x,q)")->required();
    series_cmd->add_option("--q", q_text, "polynomial Q(x,q)");
    series_cmd->add_option("--r", r_text, "polynomial R(x,q)");
    series_cmd->add_option("--order", order, "truncation order")->required()->check(CLI::NonNegativeNumber);
    series_cmd->add_flag("--json", as_json);

    auto* derive_cmd = app.add_subcommand("derive", "closed forms for all q-derivatives at q=1");
    derive_cmd->add_option("--p", p_text, "polynomial P(x,q)")->required();
    derive_cmd->add_option("--q", q_text, "polynomial Q(x,q)");
    derive_cmd->add_option("--r", r_text, "polynomial R(x,q)");
    derive_cmd->add_option("--order", order, "highest derivative order K")
        ->required()
        ->check(CLI::NonNegativeNumber);
    derive_cmd->add_option("--series", series_order, "print Maclaurin series to this order instead");
    derive_cmd->add_flag("--json", as_json);

    auto* moments_cmd = app.add_subcommand("moments", "enumerator of the sum of p-th powers of areas");
    moments_cmd->add_option("--steps", steps_text, "step set literal (dynamic-program route)");
    moments_cmd->add_option("--p", p_text, "polynomial P(x,q) (closed-form route)");
    moments_cmd->add_option("--q", q_text, "polynomial Q(x,q)");
    moments_cmd->add_option("--r", r_text, "polynomial R(x,q)");
    moments_cmd->add_option("--power", power, "power of the area")->required()
        ->check(CLI::PositiveNumber);
    moments_cmd->add_option("--order", order, "truncation order")->required()
        ->check(CLI::NonNegativeNumber);
    moments_cmd->add_flag("--json", as_json);

    auto* stats_cmd = app.add_subcommand("stats", "exact mean and variance of the area per length");
    stats_cmd->add_option("--steps", steps_text, "step set literal")->required();
    stats_cmd->add_option("--max-n", max_n, "largest walk length")->required()->check(CLI::PositiveNumber);
    stats_cmd->add_flag("--json", as_json);
    stats_cmd->add_flag("--growth", growth, "append a Richardson growth estimate of the counts");

    auto* oeis_cmd = app.add_subcommand("oeis", "look sequences up on OEIS (network, opt-in)");
    oeis_cmd->add_option("--terms", terms_text, "comma-separated initial terms")->required();
    oeis_cmd->add_flag("--online", online, "allow the network request");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (dp_cmd->parsed()) {
            run_dp(out, steps_text, max_n, at_q1, as_json);
        } else if (series_cmd->parsed()) {
            run_series(out, parse_equation(p_text, q_text, r_text), order, as_json);
        } else if (derive_cmd->parsed()) {
            run_derive(out, parse_equation(p_text, q_text, r_text), order, as_json, series_order);
        } else if (moments_cmd->parsed()) {
            if (steps_text.empty() == p_text.empty())
                throw std::invalid_argument("moments needs exactly one of --steps or --p/--q/--r");
            run_moments(out, steps_text, p_text, q_text, r_text, power, order, as_json);
        } else if (stats_cmd->parsed()) {
            run_stats(out, steps_text, max_n, as_json, growth);
        } else if (oeis_cmd->parsed()) {
            run_oeis(out, terms_text, online);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qew
