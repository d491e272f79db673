#include "loopbv/cli/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "loopbv/axioms.hpp"
#include "loopbv/cli/io.hpp"
#include "loopbv/errors.hpp"
#include "loopbv/series.hpp"

namespace loopbv::cli {

namespace {

struct Globals {
    std::string format = "table";
    bool quiet = false;
    std::uint64_t seed = 20240229;
};

struct AlgebraFlags {
    int n = 1;
    std::string bv_case = "A_v";
};

struct WindowFlags {
    int min_degree = 0;
    int max_degree = 0;
    CLI::Option* min_opt = nullptr;
    CLI::Option* max_opt = nullptr;

    // Defaults to loop degrees [-(2n+1), 4n].
    std::pair<int, int> resolve(const AlgebraConfig& cfg) const
    {
        const int lo = min_opt->count() ? min_degree : -cfg.manifold_dim();
        const int hi = max_opt->count() ? max_degree : 4 * cfg.n();
        if (lo > hi)
            throw InputError("empty degree window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return {lo, hi};
    }
};

void add_algebra_flags(CLI::App* sub, AlgebraFlags& flags, bool allow_all_cases = false)
{
    sub->add_option("--n", flags.n, "RP^{2n+1} parameter (n >= 1)")->capture_default_str();
    sub->add_option("--case", flags.bv_case,
                    allow_all_cases ? "BV case: A_v, A_vxw, B_w, B_wxvw or all" : "BV case: A_v, A_vxw, B_w or B_wxvw")
        ->capture_default_str();
}

void add_window_flags(CLI::App* sub, WindowFlags& flags)
{
    flags.min_opt = sub->add_option("--min-degree", flags.min_degree, "lowest loop degree (default -(2n+1))");
    flags.max_opt = sub->add_option("--max-degree", flags.max_degree, "highest loop degree (default 4n)");
}

std::vector<Component> components(const std::string& text)
{
    if (text == "both")
        return {Component::e, Component::g};
    return {parse_component(text)};
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed, const char* command)
{
    for (const char* f : allowed)
        if (g.format == f)
            return;
    throw InputError(std::string("format '") + g.format + "' is not available for " + command);
}

void dump(std::ostream& out, const Json& j)
{
    out << j.dump(2) << '\n';
}

std::string join(const std::vector<std::int64_t>& values, const char* sep)
{
    std::ostringstream s;
    for (std::size_t i = 0; i < values.size(); ++i)
        s << (i ? sep : "") << values[i];
    return s.str();
}

std::string bracketed(const std::vector<std::int64_t>& values)
{
    return "[" + join(values, ", ") + "]";
}

// ---- ring ------------------------------------------------------------------

int cmd_ring(const Globals& g, const AlgebraFlags& af, const WindowFlags& wf, const std::string& comp,
             std::ostream& out)
{
    require_format(g, {"table", "json", "csv"}, "ring");
    const AlgebraConfig cfg(af.n, parse_bv_case(af.bv_case));
    const auto [lo, hi] = wf.resolve(cfg);
    std::optional<Component> filter;
    if (comp != "both")
        filter = parse_component(comp);
    const auto monomials = basis_window(cfg, filter, lo, hi);

    if (g.format == "json") {
        Json rows = Json::array();
        for (const Monomial& m : monomials)
            rows.push_back({{"monomial", to_string(m)},
                            {"loop_degree", loop_degree(m, cfg)},
                            {"top_degree", top_degree(m, cfg)},
                            {"component", std::string(to_string(component(m, cfg)))}});
        dump(out, {{"n", cfg.n()}, {"case", std::string(to_string(cfg.bv_case()))}, {"basis", rows}});
    } else if (g.format == "csv") {
        out << "monomial,loop_degree,top_degree,component\n";
        for (const Monomial& m : monomials)
            out << to_string(m) << ',' << loop_degree(m, cfg) << ',' << top_degree(m, cfg) << ','
                << to_string(component(m, cfg)) << '\n';
    } else if (!g.quiet) {
        out << std::left << std::setw(20) << "monomial" << std::setw(6) << "loop" << std::setw(6) << "top"
            << "comp\n";
        for (const Monomial& m : monomials)
            out << std::setw(20) << to_string(m) << std::setw(6) << loop_degree(m, cfg) << std::setw(6)
                << top_degree(m, cfg) << to_string(component(m, cfg)) << '\n';
    }
    return kExitOk;
}

// ---- bv --------------------------------------------------------------------

int cmd_bv_table(const Globals& g, const AlgebraFlags& af, const WindowFlags& wf, const std::string& comp,
                 std::ostream& out)
{
    require_format(g, {"table", "json", "csv"}, "bv table");
    const BvAlgebra algebra(AlgebraConfig(af.n, parse_bv_case(af.bv_case)));
    const auto [lo, hi] = wf.resolve(algebra.config());
    std::optional<Component> filter;
    if (comp != "both")
        filter = parse_component(comp);
    const DeltaTable table = delta_table(algebra, filter, lo, hi);

    if (g.format == "json") {
        dump(out, delta_table_to_json(table));
    } else if (g.format == "csv") {
        out << delta_table_to_csv(table);
    } else if (!g.quiet) {
        out << std::left << std::setw(20) << "monomial" << std::setw(6) << "comp" << std::setw(6) << "loop"
            << "delta\n";
        for (const DeltaRow& row : table)
            out << std::setw(20) << to_string(row.source) << std::setw(6) << to_string(row.component)
                << std::setw(6) << row.loop_degree << to_string(row.image) << '\n';
    }
    return kExitOk;
}

int cmd_bv_check(const Globals& g, const AlgebraFlags& af, const WindowFlags& wf, std::size_t samples,
                 bool exhaustive, std::ostream& out)
{
    require_format(g, {"table", "json"}, "bv check");
    const BvAlgebra algebra(AlgebraConfig(af.n, parse_bv_case(af.bv_case)));
    const AlgebraConfig& cfg = algebra.config();
    AxiomCheckOptions options = default_axiom_options(cfg, g.seed);
    if (wf.min_opt->count())
        options.min_degree = wf.min_degree;
    if (wf.max_opt->count())
        options.max_degree = wf.max_degree;
    if (options.min_degree > options.max_degree)
        throw InputError("empty degree window");
    options.samples = samples;
    options.exhaustive_pairs = exhaustive;

    const AxiomReport axioms = check_bv_axioms(algebra, options);
    const auto nonvanishing = delta_nonvanishing_on_trivial(algebra, options.min_degree, options.max_degree);
    std::size_t oracle_mismatches = 0;
    for (const Monomial& m : basis_window(cfg, std::nullopt, options.min_degree, options.max_degree))
        if (algebra.delta(m) != algebra.delta_oracle(m))
            ++oracle_mismatches;
    const bool pass = axioms.ok() && nonvanishing.empty() && oracle_mismatches == 0;

    if (g.format == "json") {
        dump(out, {{"n", cfg.n()},
                   {"case", std::string(to_string(cfg.bv_case()))},
                   {"window", {options.min_degree, options.max_degree}},
                   {"seed", g.seed},
                   {"monomials", axioms.monomials},
                   {"pairs", axioms.pairs},
                   {"triples", axioms.triples},
                   {"violations",
                    {{"delta_squared", axioms.delta_squared},
                     {"bv_formula", axioms.bv_formula},
                     {"symmetry", axioms.symmetry},
                     {"jacobi", axioms.jacobi},
                     {"poisson", axioms.poisson},
                     {"delta_on_trivial_component", nonvanishing.size()},
                     {"oracle_mismatch", oracle_mismatches}}},
                   {"examples", axioms.examples},
                   {"pass", pass}});
    } else if (!g.quiet) {
        out << "bv check n=" << cfg.n() << " case=" << to_string(cfg.bv_case()) << " window=["
            << options.min_degree << ", " << options.max_degree << "] seed=" << g.seed << '\n'
            << "  monomials " << axioms.monomials << ", pairs " << axioms.pairs << ", triples " << axioms.triples
            << '\n'
            << "  Delta^2 = 0            violations: " << axioms.delta_squared << '\n'
            << "  BV formula             violations: " << axioms.bv_formula << '\n'
            << "  bracket symmetry       violations: " << axioms.symmetry << '\n'
            << "  Jacobi                 violations: " << axioms.jacobi << '\n'
            << "  Poisson rule           violations: " << axioms.poisson << '\n'
            << "  Delta = 0 on e         violations: " << nonvanishing.size() << '\n'
            << "  delta = delta_oracle   mismatches: " << oracle_mismatches << '\n';
        for (const std::string& e : axioms.examples)
            out << "  e.g. " << e << '\n';
        out << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kExitOk : kExitFailed;
}

// ---- pages -----------------------------------------------------------------

void print_page_grid(const Page& page, const AlgebraConfig& cfg, Component comp, std::ostream& out)
{
    out << "E^" << page.index() << " page, " << to_string(comp) << "-component, n=" << cfg.n()
        << ", case=" << to_string(cfg.bv_case()) << ", topological degree <= " << page.max_top_degree() << '\n';
    if (page.entries().empty()) {
        out << "  (empty)\n";
    } else {
        int p_max = 0;
        int q_min = page.entries().begin()->first.q;
        int q_max = q_min;
        for (const auto& [cell, dim] : page.entries()) {
            p_max = std::max(p_max, cell.p);
            q_min = std::min(q_min, cell.q);
            q_max = std::max(q_max, cell.q);
        }
        out << std::right << std::setw(6) << "q\\p";
        for (int p = 0; p <= p_max; ++p)
            out << std::setw(4) << p;
        out << '\n';
        for (int q = q_max; q >= q_min; --q) {
            out << std::setw(6) << q;
            for (int p = 0; p <= p_max; ++p) {
                const auto d = page.dim(p, q);
                if (d == 0)
                    out << std::setw(4) << '.';
                else
                    out << std::setw(4) << d;
            }
            out << '\n';
        }
    }
    out << "series: " << join(page_series(page, cfg).coefficients, " ") << '\n';
}

int cmd_pages(const Globals& g, const AlgebraFlags& af, const std::string& comp, int max_degree, int page_index,
              std::ostream& out)
{
    require_format(g, {"table", "json", "csv"}, "pages");
    if (max_degree < 0)
        throw InputError("--max-degree must be >= 0");
    const BvAlgebra algebra(AlgebraConfig(af.n, parse_bv_case(af.bv_case)));
    const AlgebraConfig& cfg = algebra.config();
    const auto comps = components(comp);

    std::vector<Page> pages;
    for (Component c : comps) {
        const SSConfig ss{algebra, c, max_degree};
        pages.push_back(page_index == 2 ? e2_page(ss) : e3_page(ss));
    }

    if (g.format == "json") {
        if (pages.size() == 1) {
            dump(out, page_to_json(pages[0], cfg, comps[0]));
        } else {
            Json all = Json::array();
            for (std::size_t i = 0; i < pages.size(); ++i)
                all.push_back(page_to_json(pages[i], cfg, comps[i]));
            dump(out, {{"pages", all}});
        }
    } else if (g.format == "csv") {
        if (pages.size() == 1) {
            out << page_to_csv(pages[0]);
        } else {
            out << "component,p,q,dim\n";
            for (std::size_t i = 0; i < pages.size(); ++i)
                for (const auto& [cell, dim] : pages[i].entries())
                    out << to_string(comps[i]) << ',' << cell.p << ',' << cell.q << ',' << dim << '\n';
        }
    } else if (!g.quiet) {
        for (std::size_t i = 0; i < pages.size(); ++i)
            print_page_grid(pages[i], cfg, comps[i], out);
    }
    return kExitOk;
}

// ---- series ----------------------------------------------------------------

int cmd_series(const Globals& g, int n, const std::string& which, CLI::Option* expand_opt, int expand_to,
               bool average, std::ostream& out)
{
    require_format(g, {"table", "json"}, "series");
    const RationalSeries r = which == "lg" ? lg_series(n) : which == "le" ? le_series(n) : westerland_total(n);
    std::optional<TruncatedSeries> expansion;
    if (expand_opt->count()) {
        if (expand_to < 0)
            throw InputError("--expand must be >= 0");
        expansion = expand(r, expand_to);
    }
    std::optional<Rational> avg;
    if (average)
        avg = average_alternating(r);

    if (g.format == "json") {
        Json j = {{"n", n},
                  {"which", which},
                  {"numerator", r.numerator().coefficients()},
                  {"denominator", r.denominator().coefficients()}};
        if (expansion)
            j["expansion"] = expansion->coefficients;
        if (avg)
            j["average"] = to_string(*avg);
        dump(out, j);
    } else if (g.quiet) {
        if (avg)
            out << to_string(*avg) << '\n';
    } else {
        out << which << "(n=" << n << ") = " << bracketed(r.numerator().coefficients()) << "/"
            << bracketed(r.denominator().coefficients()) << '\n';
        if (expansion)
            out << "expansion: " << join(expansion->coefficients, " ") << '\n';
        if (avg)
            out << "average: " << to_string(*avg) << '\n';
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const Globals& g, const AlgebraFlags& af, int max_degree, std::ostream& out)
{
    require_format(g, {"table", "json"}, "verify");
    if (max_degree < 0)
        throw InputError("--max-degree must be >= 0");
    std::vector<BvCase> cases;
    if (af.bv_case == "all")
        cases.assign(kAllCases.begin(), kAllCases.end());
    else
        cases.push_back(parse_bv_case(af.bv_case));

    bool all_pass = true;
    Json results = Json::array();
    for (BvCase c : cases) {
        const BvAlgebra algebra(AlgebraConfig(af.n, c));
        const CollapseReport r = verify_collapse(algebra, max_degree);
        const bool pass = r.pass() && r.trivial_page_stable;
        all_pass = all_pass && pass;
        if (g.format == "json") {
            Json j = {{"n", af.n},
                      {"case", std::string(to_string(c))},
                      {"max_degree", max_degree},
                      {"series_match", r.pass()},
                      {"trivial_page_stable", r.trivial_page_stable},
                      {"pass", pass}};
            if (!pass) {
                j["computed"] = r.sum.coefficients;
                j["target"] = r.target.coefficients;
            }
            if (r.first_mismatch)
                j["first_mismatch"] = {{"degree", *r.first_mismatch},
                                       {"computed", r.computed_at_mismatch},
                                       {"target", r.expected_at_mismatch}};
            results.push_back(j);
        } else if (!g.quiet) {
            out << "verify n=" << af.n << " case=" << to_string(c) << " max-degree=" << max_degree << ": "
                << (pass ? "PASS" : "FAIL") << '\n';
            if (!pass) {
                if (r.first_mismatch)
                    out << "  first mismatch at degree " << *r.first_mismatch << ": computed "
                        << r.computed_at_mismatch << ", target " << r.expected_at_mismatch << '\n';
                if (!r.trivial_page_stable)
                    out << "  E^3(e) differs from E^2(e)\n";
                out << "  computed E^3(e)+E^3(g): " << join(r.sum.coefficients, " ") << '\n'
                    << "  target:                 " << join(r.target.coefficients, " ") << '\n';
            }
        }
    }
    if (g.format == "json")
        dump(out, cases.size() == 1 ? results[0] : Json{{"results", results}, {"pass", all_pass}});
    return all_pass ? kExitOk : kExitFailed;
}

// ---- resonance -------------------------------------------------------------

int cmd_resonance(const Globals& g, const std::string& input_path, const std::string& check, CLI::Option* morse_opt,
                  int morse_q, std::ostream& out)
{
    require_format(g, {"table", "json"}, "resonance");
    const ResonanceInput input = load_resonance_input(input_path);
    if (morse_opt->count() && morse_q < 0)
        throw InputError("--morse must be >= 0");

    const ResonanceReport full = resonance_check(input.records, input.n);
    Json j;
    bool pass = false;
    if (check == "nondegenerate") {
        const NondegenerateReport nd = nondegenerate_check(input.records, input.n);
        pass = nd.pass;
        j = nondegenerate_to_json(nd);
        if (!g.quiet && g.format == "table") {
            out << "nondegenerate resonance, n=" << nd.n << ", " << nd.labels.size() << " geodesics\n"
                << "  sum (-1)^i / mean index = " << to_string(nd.sum) << '\n'
                << "  target (n+1)/n          = " << to_string(nd.target) << '\n';
            if (!pass)
                out << "  diff                    = " << to_string(nd.diff()) << '\n';
            if (nd.vacuous)
                out << "  no geodesics given\n";
            out << (pass ? "PASS" : "FAIL") << '\n';
        }
    } else {
        pass = full.pass;
        j = resonance_to_json(full);
        if (!g.quiet && g.format == "table") {
            out << "resonance identity, n=" << full.n << '\n';
            for (std::size_t i = 0; i < full.labels.size(); ++i)
                out << "  " << std::left << std::setw(16) << full.labels[i] << " mean Euler "
                    << std::setw(8) << to_string(full.mean_euler[i]) << " weighted "
                    << to_string(full.weighted[i]) << '\n';
            out << "  sum              = " << to_string(full.sum) << '\n'
                << "  target (n+1)/2n  = " << to_string(full.target) << '\n';
            if (!pass)
                out << "  diff             = " << to_string(full.diff()) << '\n';
            if (full.vacuous)
                out << "  no geodesics given\n";
            out << (pass ? "PASS" : "FAIL") << '\n';
        }
    }

    if (morse_opt->count()) {
        const MorseTruncation morse = morse_truncation(input.records, input.n, morse_q);
        j["morse"] = morse_to_json(morse, full.sum);
        if (!g.quiet && g.format == "table") {
            out << "Morse truncation q=" << morse.q << ": M^q(-1) = " << morse.alternating_sum;
            if (morse.average)
                out << ", M^q(-1)/q = " << to_string(*morse.average) << " (limit " << to_string(full.sum)
                    << ", |error| ~ " << j["morse"]["abs_error_approx"].get<double>() << ")";
            out << '\n';
        }
    }
    if (g.format == "json")
        dump(out, j);
    return pass ? kExitOk : kExitFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Loop homology BV structures, equivariant spectral sequences and resonance checks for RP^{2n+1}",
                 "loopbv"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--format", g.format, "output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--quiet", g.quiet, "suppress table output; the exit status still reports the result");
    app.add_option("--seed", g.seed, "seed for sampled property checks")->capture_default_str();

    auto sub = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    // ring
    AlgebraFlags ring_af;
    WindowFlags ring_wf;
    std::string ring_comp = "both";
    CLI::App* ring = sub("ring", "list normal-form basis monomials with degrees and components");
    add_algebra_flags(ring, ring_af);
    add_window_flags(ring, ring_wf);
    ring->add_option("--component", ring_comp, "e, g or both")
        ->check(CLI::IsMember({"e", "g", "both"}))
        ->capture_default_str();

    // bv
    CLI::App* bv = sub("bv", "BV operator tables and axiom checks");
    bv->require_subcommand(1);
    AlgebraFlags bvt_af;
    WindowFlags bvt_wf;
    std::string bvt_comp = "both";
    CLI::App* bv_table = bv->add_subcommand("table", "Delta on every basis monomial of a degree window");
    bv_table->fallthrough();
    add_algebra_flags(bv_table, bvt_af);
    add_window_flags(bv_table, bvt_wf);
    bv_table->add_option("--component", bvt_comp, "e, g or both")
        ->check(CLI::IsMember({"e", "g", "both"}))
        ->capture_default_str();
    AlgebraFlags bvc_af;
    WindowFlags bvc_wf;
    std::size_t bvc_samples = 1000;
    bool bvc_exhaustive = false;
    CLI::App* bv_check = bv->add_subcommand(
        "check", "check Delta^2 = 0, the BV formula, symmetry, Jacobi, the Poisson rule and Delta = 0 on e; "
                 "window defaults to [-(2n+1), 12n]");
    bv_check->fallthrough();
    add_algebra_flags(bv_check, bvc_af);
    add_window_flags(bv_check, bvc_wf);
    bv_check->add_option("--samples", bvc_samples, "sampled pairs and triples per identity")->capture_default_str();
    bv_check->add_flag("--exhaustive-pairs", bvc_exhaustive, "check every pair instead of sampling");

    // pages
    AlgebraFlags pages_af;
    std::string pages_comp = "both";
    int pages_max = 30;
    int pages_index = 3;
    CLI::App* pages = sub("pages", "E^2 or E^3 page dimensions of the equivariant spectral sequence");
    add_algebra_flags(pages, pages_af);
    pages->add_option("--component", pages_comp, "e, g or both")
        ->check(CLI::IsMember({"e", "g", "both"}))
        ->capture_default_str();
    pages->add_option("--max-degree", pages_max, "largest topological degree")->capture_default_str();
    pages->add_option("--page", pages_index, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();

    // series
    int series_n = 1;
    std::string series_which = "lg";
    int series_expand = 0;
    bool series_average = false;
    CLI::App* series = sub("series", "closed-form equivariant Poincare series");
    series->add_option("--n", series_n, "RP^{2n+1} parameter (n >= 1)")->capture_default_str();
    series->add_option("--which", series_which, "lg (non-trivial component), le (trivial component) or total")
        ->check(CLI::IsMember({"lg", "le", "total"}))
        ->capture_default_str();
    CLI::Option* series_expand_opt = series->add_option("--expand", series_expand, "print coefficients through t^N");
    series->add_flag("--average", series_average, "print the average alternating Betti number");

    // verify
    AlgebraFlags verify_af;
    int verify_max = 100;
    CLI::App* verify = sub("verify", "check E^3(e) + E^3(g) against the total equivariant series");
    add_algebra_flags(verify, verify_af, true);
    verify->add_option("--max-degree", verify_max, "largest topological degree")->capture_default_str();

    // resonance
    std::string res_input;
    std::string res_check = "full";
    int res_morse = 0;
    CLI::App* resonance = sub("resonance", "check the resonance identity for a set of closed geodesics");
    resonance->add_option("--input", res_input, "geodesic data (JSON)")->required();
    resonance->add_option("--check", res_check, "full or nondegenerate")
        ->check(CLI::IsMember({"full", "nondegenerate"}))
        ->capture_default_str();
    CLI::Option* res_morse_opt =
        resonance->add_option("--morse", res_morse, "also report the Morse series truncated at degree q");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (ring->parsed())
            return cmd_ring(g, ring_af, ring_wf, ring_comp, out);
        if (bv_table->parsed())
            return cmd_bv_table(g, bvt_af, bvt_wf, bvt_comp, out);
        if (bv_check->parsed())
            return cmd_bv_check(g, bvc_af, bvc_wf, bvc_samples, bvc_exhaustive, out);
        if (pages->parsed())
            return cmd_pages(g, pages_af, pages_comp, pages_max, pages_index, out);
        if (series->parsed()) {
            if (series_n < 1)
                throw InputError("--n must be >= 1");
            return cmd_series(g, series_n, series_which, series_expand_opt, series_expand, series_average, out);
        }
        if (verify->parsed())
            return cmd_verify(g, verify_af, verify_max, out);
        if (resonance->parsed())
            return cmd_resonance(g, res_input, res_check, res_morse_opt, res_morse, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NonQuasilinearError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    err << app.help();
    return kExitInput;
}

} // namespace loopbv::cli
