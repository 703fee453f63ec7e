// Whole-mechanism analysis document: constraint ideal, dimension, radicality,
// decomposition, singular points, classification, Pluecker ranks. Reruns with
// the same spec and seeds reproduce byte-identical output.
#pragma once

#include "cspace/linkage.hpp"
#include "cspace/singular.hpp"

namespace cspace {

struct AnalyzeOptions {
    std::uint64_t seed = 0;
    std::int64_t budget_limit = 100'000'000;
    // none: drop any maps; paper: the hard-coded Goldberg transformation;
    // random: seeded maps; file: whatever the spec carries
    std::string moebius = "file";
    bool force_decomposition = false;
    int probe_slices = 5;
};

struct StageStatus {
    bool ran = false;
    bool failed = false;
    std::string error;
};

struct AnalysisDocument {
    std::string mechanism;
    MechanismSpec spec;  // after the moebius option was applied
    std::uint64_t seed = 0;

    StageStatus st_ideal, st_dimension, st_radical, st_decomposition, st_singular, st_classify,
        st_pluecker, st_probe;

    Ideal ideal;
    int dim = 0;
    bool radical = false;
    std::optional<Decomposition> decomposition;
    std::vector<std::pair<std::size_t, std::size_t>> inclusions;
    std::optional<SingularityReport> singular;
    std::optional<RealDimProbeResult> probe;
    std::optional<Classification> classification;
    std::vector<int> pluecker_ranks;  // aligned with singular points
    std::int64_t budget_used = 0;

    std::string machine_text() const;
    std::string summary_text() const;
};

AnalysisDocument analyze(const MechanismSpec& spec, const AnalyzeOptions& opt);

}  // namespace cspace
