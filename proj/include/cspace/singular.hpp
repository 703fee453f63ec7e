// Jacobian and minors-ideal computation, singular-locus extraction,
// AS / KS / shaky classification, and Pluecker-coordinate rank checks.
#pragma once

#include <cstdint>
#include <optional>

#include "cspace/decompose.hpp"
#include "cspace/dualquat.hpp"
#include "cspace/realroots.hpp"

namespace cspace {

struct JacobianMatrix {
    std::vector<std::vector<Polynomial>> rows;  // rows = generators, columns = variables
};

JacobianMatrix jacobian(const Ideal& I);

// Ideal generated by all size x size minors of the Jacobian of I's generators.
Ideal jacobian_minors_ideal(const Ideal& I, int size, Budget budget);

// Exact rank of the Jacobian evaluated at a rational point.
int jacobian_rank_at(const JacobianMatrix& jac, const std::vector<Rat>& point);

// Exact generic rank of the Jacobian on the component V(prime): Gaussian
// elimination over the coordinate ring with zero tests modulo the prime.
int jacobian_generic_rank_mod(const JacobianMatrix& jac, const Ideal& prime, Budget budget);

struct SingularityReport {
    Ideal source_ideal;
    Ideal minors_ideal;
    Ideal singular_ideal;  // source + minors
    int minors_size = 0;
    int source_dim = 0;
    bool locus_empty = false;
    bool locus_zero_dimensional = false;
    std::optional<ZeroDimSolution> points;  // when the locus is zero-dimensional
    std::uint64_t seed = 0;
};

// codim defaults to (#vars - dim I): the locus where rank < #vars - dim.
SingularityReport singular_locus(const Ideal& I, std::optional<int> codim, std::uint64_t seed,
                                 Budget budget);

struct PointClassification {
    RationalPoint point;
    bool algebraic_singularity = true;
    bool kinematic_singularity = false;
    bool embedded_double_point = false;
    int rank_at_point = 0;
    int generic_rank = -1;  // on the positive-dimensional component through the point, -1 if none
};

struct Classification {
    std::vector<PointClassification> points;
    bool shaky = false;
    bool indeterminate = false;
    bool non_radical = false;
    bool embedded_pattern = false;  // some component embedded in another
    int primary_count = 0;          // r
    int minimal_prime_count = 0;    // s
    std::uint64_t seed = 0;
};

// Labels the singular points against the decomposition and the real-dimension
// probe (Remark-3 shakiness + real-vs-complex dimension deficit signal).
Classification classify(const SingularityReport& report, const Decomposition& decomp,
                        const RealDimProbeResult& probe, Budget budget);

// Rank over Q of the 6 x n matrix of Pluecker coordinates (primal direction;
// dual moment) of the axes.
int pluecker_rank(const std::vector<DQ>& axes);

}  // namespace cspace
