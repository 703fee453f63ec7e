// cspace: exact constraint-ideal and singularity analysis for revolute-joint
// linkages. Results go to stdout (or --output), diagnostics to stderr.
// Exit codes: 0 ok, 1 usage, 2 computation failure (budget), 3 spec error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>

#include "cspace/report.hpp"

namespace {

using namespace cspace;

struct CommonOpts {
    std::string spec_path;
    std::string moebius = "file";
    std::uint64_t seed = 0;
    std::int64_t budget = 100'000'000;
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_spec = true) {
    if (needs_spec)
        cmd->add_option("spec", o.spec_path, "mechanism spec file (TOML)")->required();
    cmd->add_option("--moebius", o.moebius, "none | paper | random | file (default file)");
    cmd->add_option("--seed", o.seed, "seed for random maps / generic choices");
    cmd->add_option("--budget", o.budget, "reduction-step budget (env CSPACE_BUDGET overrides)");
    cmd->add_option("--output", o.output, "write results to a file instead of stdout");
}

MechanismSpec spec_with_maps(const CommonOpts& o) {
    MechanismSpec s = load_mechanism_file(o.spec_path);
    if (o.moebius == "none") {
        s.maps.reset();
        s.moebius_mode = "none";
    } else if (o.moebius == "paper") {
        s = apply_moebius(s, paper_moebius_maps());
        s.moebius_mode = "paper";
    } else if (o.moebius == "random") {
        s = apply_moebius(s, random_moebius_maps(s.njoints(), o.seed));
        s.moebius_mode = "random";
        s.seed = o.seed;
    } else if (o.moebius != "file") {
        throw std::invalid_argument("unknown --moebius value: " + o.moebius);
    }
    return s;
}

Ideal ideal_from_file(const std::string& path, int forced_vars) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open ideal file: " + path);
    std::vector<std::string> lines;
    std::string line;
    int max_t = forced_vars;
    bool uses_u = false;
    std::regex tvar("t([0-9]+)");
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char c : line) {
            if (c == '#') break;
            trimmed += c;
        }
        bool blank = true;
        for (char c : trimmed)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        lines.push_back(trimmed);
        for (auto it = std::sregex_iterator(trimmed.begin(), trimmed.end(), tvar);
             it != std::sregex_iterator(); ++it)
            max_t = std::max(max_t, std::stoi((*it)[1].str()));
        if (trimmed.find('u') != std::string::npos) uses_u = true;
    }
    std::vector<std::string> names;
    for (int i = 1; i <= max_t; ++i) names.push_back("t" + std::to_string(i));
    if (uses_u) names.push_back("u");
    RingPtr ring = make_ring(names);
    std::vector<Polynomial> gens;
    for (const auto& l : lines) gens.push_back(parse_poly(ring, l));
    return Ideal(ring, std::move(gens));
}

std::int64_t effective_budget(const CommonOpts& o) {
    if (const char* env = std::getenv("CSPACE_BUDGET")) return std::stoll(env);
    return o.budget;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constraint-ideal singularity analysis for revolute-joint linkages"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string at_config;
    std::string ideal_path;
    int forced_vars = 0;
    std::string order_name = "degrevlex";
    bool summary_only = false;

    auto* c_build = app.add_subcommand("build", "print the constraint ideal (reduced basis)");
    add_common(c_build, o);
    auto* c_dim = app.add_subcommand("dim", "dimension of a constraint ideal or raw ideal file");
    add_common(c_dim, o, false);
    c_dim->add_option("spec", o.spec_path, "mechanism spec file (TOML)");
    c_dim->add_option("--ideal", ideal_path, "raw ideal file instead of a spec");
    c_dim->add_option("--vars", forced_vars, "force ring t1..tN for --ideal");
    auto* c_rad = app.add_subcommand("radical", "radicality of the constraint ideal");
    add_common(c_rad, o);
    auto* c_dec = app.add_subcommand("decompose", "irredundant primary decomposition");
    add_common(c_dec, o);
    auto* c_sing = app.add_subcommand("singular", "singular locus and rational singular points");
    add_common(c_sing, o);
    auto* c_cls = app.add_subcommand("classify", "label singular points (AS/KS/embedded), shakiness");
    add_common(c_cls, o);
    auto* c_plk = app.add_subcommand("plucker-rank", "rank of the axes' Pluecker matrix");
    add_common(c_plk, o);
    c_plk->add_option("--at", at_config,
                      "configuration: 'identity' or comma list of rationals ('inf' = half turn)")
        ->required();
    auto* c_ana = app.add_subcommand("analyze", "full analysis document");
    add_common(c_ana, o);
    c_ana->add_flag("--summary", summary_only, "print the plain-text summary only");
    auto* c_gb = app.add_subcommand("gb", "reduced Groebner basis of a raw ideal file");
    add_common(c_gb, o, false);
    c_gb->add_option("--ideal", ideal_path, "file of canonical polynomials, one per line")
        ->required();
    c_gb->add_option("--vars", forced_vars, "force ring t1..tN");
    c_gb->add_option("--order", order_name, "degrevlex (default) or lex");

    CLI11_PARSE(app, argc, argv);

    std::ofstream file;
    try {
        std::ostream* outp = &std::cout;
        if (!o.output.empty()) {
            file.open(o.output);
            if (!file) throw std::invalid_argument("cannot open output file " + o.output);
            outp = &file;
        }
        std::ostream& out = *outp;

        AnalyzeOptions opt;
        opt.seed = o.seed;
        opt.budget_limit = effective_budget(o);
        opt.moebius = o.moebius;

        auto analyzed = [&](bool force_decomp) {
            MechanismSpec spec = load_mechanism_file(o.spec_path);
            opt.force_decomposition = force_decomp;
            return analyze(spec, opt);
        };

        if (*c_build) {
            AnalysisDocument doc = analyzed(false);
            if (doc.st_ideal.failed) throw budget_error(doc.st_ideal.error);
            for (const auto& g : doc.ideal.gens) out << g.str() << "\n";
        } else if (*c_dim) {
            if (!ideal_path.empty()) {
                Ideal I = ideal_from_file(ideal_path, forced_vars);
                if (I.gens.empty()) {
                    out << "dimension: " << I.ring->size() << "\n";  // V(0) is everything
                } else {
                    Budget budget(effective_budget(o));
                    out << "dimension: " << dimension(I, budget) << "\n";
                }
            } else if (!o.spec_path.empty()) {
                AnalysisDocument doc = analyzed(false);
                if (doc.st_dimension.failed) throw budget_error(doc.st_dimension.error);
                out << "dimension: " << doc.dim << "\n";
            } else {
                throw std::invalid_argument("dim needs a spec file or --ideal");
            }
        } else if (*c_rad) {
            AnalysisDocument doc = analyzed(false);
            if (doc.st_radical.failed) throw budget_error(doc.st_radical.error);
            out << "radical: " << (doc.radical ? "true" : "false") << "\n";
        } else if (*c_dec) {
            AnalysisDocument doc = analyzed(true);
            if (!doc.decomposition) throw budget_error(doc.st_decomposition.error);
            const auto& d = *doc.decomposition;
            out << "components: " << d.components.size() << "\n";
            for (std::size_t i = 0; i < d.components.size(); ++i) {
                const auto& c = d.components[i];
                out << "component " << (i + 1) << ": dim " << c.dim
                    << (c.is_prime ? " prime" : " primary (not prime)");
                if (c.is_prime && !c.prime_certified) out << " (not certified)";
                out << "\n";
                for (const auto& g : c.primary.gens) out << "  " << g.str() << "\n";
            }
            for (const auto& [i, j] : doc.inclusions)
                out << "inclusion: component " << (i + 1) << " embedded in component " << (j + 1)
                    << "\n";
        } else if (*c_sing) {
            AnalysisDocument doc = analyzed(false);
            if (!doc.singular || doc.st_singular.failed) throw budget_error(doc.st_singular.error);
            const auto& s = *doc.singular;
            out << "minors_size: " << s.minors_size << "\n";
            out << "locus_empty: " << (s.locus_empty ? "true" : "false") << "\n";
            if (s.points) {
                out << "rational_points:\n";
                for (const auto& p : s.points->rational_points)
                    out << "  " << p.str(doc.ideal.ring) << "\n";
                out << "real_count: " << s.points->real_count << "\n";
                out << "complex_count: " << s.points->complex_count << "\n";
            }
        } else if (*c_cls) {
            AnalysisDocument doc = analyzed(true);
            if (!doc.classification) throw budget_error("classification unavailable");
            out << doc.machine_text();
        } else if (*c_plk) {
            MechanismSpec s = spec_with_maps(o);
            std::vector<JointValue> vals;
            if (at_config == "identity") {
                vals.assign(s.loops[0].size(), JointValue{Rat(0)});
            } else {
                std::stringstream ss(at_config);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok == "inf")
                        vals.push_back(JointValue{HalfTurn{}});
                    else
                        vals.push_back(JointValue{parse_rat(tok)});
                }
            }
            auto axes = axes_at_configuration(s, 0, vals);
            out << "pluecker_rank: " << pluecker_rank(axes) << "\n";
        } else if (*c_ana) {
            AnalysisDocument doc = analyzed(false);
            out << (summary_only ? doc.summary_text() : doc.machine_text());
        } else if (*c_gb) {
            Ideal I = ideal_from_file(ideal_path, forced_vars);
            Budget budget(effective_budget(o));
            MonomialOrder ord;
            if (order_name == "lex")
                ord = MonomialOrder::lex();
            else if (order_name == "degrevlex")
                ord = MonomialOrder::degrevlex();
            else
                throw std::invalid_argument("unknown order: " + order_name);
            GroebnerBasis gb = buchberger(I, ord, budget);
            for (const auto& g : gb.elems) {
                Polynomial p = g.primitive_part();
                if (!p.is_zero() && sgn(p.leading_term(ord).coef) < 0) p = -p;
                out << p.str(ord) << "\n";
            }
        }
    } catch (const budget_error& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 2;
    } catch (const spec_error& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
