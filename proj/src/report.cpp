#include "cspace/report.hpp"

#include <sstream>

namespace cspace {

namespace {

MechanismSpec with_moebius_option(const MechanismSpec& spec, const AnalyzeOptions& opt) {
    MechanismSpec s = spec;
    if (opt.moebius == "none") {
        s.maps.reset();
        s.moebius_mode = "none";
    } else if (opt.moebius == "paper") {
        auto maps = paper_moebius_maps();
        if (maps.size() != s.njoints())
            throw spec_error("--moebius paper expects a 6-joint mechanism");
        s.maps = std::move(maps);
        s.moebius_mode = "paper";
    } else if (opt.moebius == "random") {
        s.maps = random_moebius_maps(s.njoints(), opt.seed);
        s.moebius_mode = "random";
        s.seed = opt.seed;
    } else if (opt.moebius != "file") {
        throw spec_error("unknown moebius option: " + opt.moebius);
    }
    return s;
}

template <class Fn>
void run_stage(StageStatus& st, Fn&& fn) {
    st.ran = true;
    try {
        fn();
    } catch (const std::exception& e) {
        st.failed = true;
        st.error = e.what();
    }
}

void emit_ideal(std::ostringstream& out, const std::string& label, const Ideal& I, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    out << pad << label << ":\n";
    for (const auto& g : I.gens) out << pad << "  - " << g.str() << "\n";
}

}  // namespace

AnalysisDocument analyze(const MechanismSpec& input_spec, const AnalyzeOptions& opt) {
    AnalysisDocument doc;
    doc.spec = with_moebius_option(input_spec, opt);
    doc.mechanism = doc.spec.name;
    doc.seed = opt.seed;
    Budget budget(opt.budget_limit);

    run_stage(doc.st_ideal, [&] { doc.ideal = constraint_ideal(doc.spec, budget); });
    if (doc.st_ideal.failed) {
        doc.budget_used = budget.used();
        return doc;
    }

    run_stage(doc.st_dimension, [&] { doc.dim = dimension(doc.ideal, budget); });
    run_stage(doc.st_radical, [&] { doc.radical = is_radical(doc.ideal, budget); });

    if ((doc.st_radical.ran && !doc.st_radical.failed && !doc.radical) ||
        opt.force_decomposition) {
        run_stage(doc.st_decomposition, [&] {
            doc.decomposition = primary_decomposition(doc.ideal, opt.seed, budget);
            doc.inclusions = component_inclusions(*doc.decomposition, budget);
        });
    }

    run_stage(doc.st_singular,
              [&] { doc.singular = singular_locus(doc.ideal, std::nullopt, opt.seed, budget); });

    if (doc.dim >= 1) {
        run_stage(doc.st_probe,
                  [&] { doc.probe = real_dim_probe(doc.ideal, opt.seed, opt.probe_slices, budget); });
    }

    if (doc.singular && !doc.st_singular.failed) {
        run_stage(doc.st_classify, [&] {
            Decomposition dec;
            if (doc.decomposition) {
                dec = *doc.decomposition;
            } else {
                // radical case: classification still wants component dims
                dec.input = doc.ideal;
                PrimaryComponent c;
                c.primary = doc.ideal;
                c.associated_prime = doc.ideal;
                c.dim = doc.dim;
                c.is_prime = false;
                c.prime_certified = false;
                dec.components.push_back(std::move(c));
            }
            RealDimProbeResult probe;
            if (doc.probe) {
                probe = *doc.probe;
            } else {
                probe.complex_dim = doc.dim;
                probe.real_points_isolated = Isolated::Unknown;
            }
            doc.classification = classify(*doc.singular, dec, probe, budget);
        });
    }

    if (doc.singular && doc.singular->points && doc.spec.loops.size() == 1) {
        run_stage(doc.st_pluecker, [&] {
            for (const auto& pt : doc.singular->points->rational_points) {
                std::vector<JointValue> vals;
                for (int j : doc.spec.loops[0])
                    vals.push_back(JointValue{pt.coords[static_cast<std::size_t>(j)]});
                auto axes = axes_at_configuration(doc.spec, 0, vals);
                doc.pluecker_ranks.push_back(pluecker_rank(axes));
            }
        });
    }

    doc.budget_used = budget.used();
    return doc;
}

namespace {

const char* isolated_str(Isolated i) {
    switch (i) {
        case Isolated::Yes: return "yes";
        case Isolated::No: return "no";
        case Isolated::Unknown: return "unknown";
    }
    return "?";
}

void emit_stage(std::ostringstream& out, const char* name, const StageStatus& st) {
    if (!st.ran) return;
    out << "  " << name << ": " << (st.failed ? "FAILED" : "ok");
    if (st.failed) out << " (" << st.error << ")";
    out << "\n";
}

}  // namespace

std::string AnalysisDocument::machine_text() const {
    std::ostringstream out;
    out << "format: cspace-analysis/1\n";
    out << "mechanism: " << mechanism << "\n";
    out << "seed: " << seed << "\n";
    out << "moebius: " << spec.moebius_mode << "\n";
    if (spec.maps) {
        out << "moebius_maps:\n";
        for (const auto& m : *spec.maps)
            out << "  - a: " << rat_str(m.a) << "  b: " << rat_str(m.b) << "  c: " << rat_str(m.c)
                << "  d: " << rat_str(m.d) << "\n";
    }
    out << "stages:\n";
    emit_stage(out, "ideal", st_ideal);
    emit_stage(out, "dimension", st_dimension);
    emit_stage(out, "radical", st_radical);
    emit_stage(out, "decomposition", st_decomposition);
    emit_stage(out, "singular", st_singular);
    emit_stage(out, "probe", st_probe);
    emit_stage(out, "classify", st_classify);
    emit_stage(out, "pluecker", st_pluecker);
    if (st_ideal.ran && !st_ideal.failed) {
        out << "ring: [";
        for (std::size_t i = 0; i < ideal.ring->size(); ++i) {
            if (i) out << ", ";
            out << ideal.ring->vars[i];
        }
        out << "]\n";
        emit_ideal(out, "constraint_ideal", ideal, 0);
    }
    if (st_dimension.ran && !st_dimension.failed) out << "dimension: " << dim << "\n";
    if (st_radical.ran && !st_radical.failed)
        out << "radical: " << (radical ? "true" : "false") << "\n";
    if (decomposition) {
        out << "decomposition:\n";
        out << "  seed: " << decomposition->seed << "\n";
        out << "  components: " << decomposition->components.size() << "\n";
        for (std::size_t i = 0; i < decomposition->components.size(); ++i) {
            const auto& c = decomposition->components[i];
            out << "  component " << (i + 1) << ":\n";
            out << "    dim: " << c.dim << "\n";
            out << "    prime: " << (c.is_prime ? "true" : "false");
            if (c.is_prime && !c.prime_certified) out << " (not certified)";
            out << "\n";
            emit_ideal(out, "primary", c.primary, 4);
            emit_ideal(out, "associated_prime", c.associated_prime, 4);
        }
        for (const auto& [i, j] : inclusions)
            out << "  inclusion: sqrt(P" << (i + 1) << ") contains P" << (j + 1)
                << " (component " << (i + 1) << " embedded in component " << (j + 1) << ")\n";
    }
    if (singular) {
        out << "singular:\n";
        out << "  minors_size: " << singular->minors_size << "\n";
        out << "  locus_empty: " << (singular->locus_empty ? "true" : "false") << "\n";
        if (!singular->locus_empty) {
            out << "  locus_zero_dimensional: "
                << (singular->locus_zero_dimensional ? "true" : "false") << "\n";
            emit_ideal(out, "singular_ideal", singular->singular_ideal, 2);
        }
        if (singular->points) {
            out << "  rational_points: " << singular->points->rational_points.size() << "\n";
            for (const auto& p : singular->points->rational_points)
                out << "    - " << p.str(ideal.ring) << "\n";
            out << "  real_count: " << singular->points->real_count << "\n";
            out << "  complex_count: " << singular->points->complex_count << "\n";
            if (singular->points->irrational_reals)
                out << "  note: real solutions with non-rational coordinates exist\n";
        }
    }
    if (probe) {
        out << "real_dim_probe:\n";
        out << "  complex_dim: " << probe->complex_dim << "\n";
        out << "  real_points_isolated: " << isolated_str(probe->real_points_isolated) << "\n";
        out << "  slices: " << probe->slices << "\n";
        out << "  seed: " << probe->seed << "\n";
        out << "  note: heuristic probe, not a decision procedure\n";
    }
    if (classification) {
        out << "classification:\n";
        out << "  primary_count: " << classification->primary_count << "\n";
        out << "  minimal_prime_count: " << classification->minimal_prime_count << "\n";
        out << "  shaky: " << (classification->shaky ? "true" : "false") << "\n";
        if (classification->indeterminate) out << "  indeterminate: true\n";
        for (std::size_t i = 0; i < classification->points.size(); ++i) {
            const auto& pc = classification->points[i];
            out << "  point " << (i + 1) << ": " << pc.point.str(ideal.ring) << "\n";
            out << "    labels:";
            out << " AS";
            if (pc.kinematic_singularity) out << " KS";
            if (pc.embedded_double_point) out << " embedded-double-point";
            out << "\n";
            out << "    rank_at_point: " << pc.rank_at_point << "\n";
            if (pc.generic_rank >= 0) out << "    generic_rank: " << pc.generic_rank << "\n";
            if (st_pluecker.ran && !st_pluecker.failed && i < pluecker_ranks.size())
                out << "    pluecker_rank: " << pluecker_ranks[i] << "\n";
        }
    }
    out << "budget_used: " << budget_used << "\n";
    return out.str();
}

std::string AnalysisDocument::summary_text() const {
    std::ostringstream out;
    out << "mechanism " << mechanism << ": ";
    if (st_ideal.failed) {
        out << "constraint ideal FAILED (" << st_ideal.error << ")\n";
        return out.str();
    }
    out << ideal.gens.size() << " generators, dim " << dim << ", "
        << (st_radical.failed ? "radical UNKNOWN" : (radical ? "radical" : "NOT radical"));
    if (decomposition) out << ", " << decomposition->components.size() << " primary components";
    if (singular) {
        if (singular->locus_empty)
            out << ", singular locus empty";
        else if (singular->points)
            out << ", " << singular->points->rational_points.size()
                << " rational singular point(s)";
    }
    if (classification) out << (classification->shaky ? ", shaky" : ", not shaky");
    out << "\n";
    return out.str();
}

}  // namespace cspace
