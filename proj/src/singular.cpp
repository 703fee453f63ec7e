#include "cspace/singular.hpp"

#include <algorithm>
#include <functional>

namespace cspace {

JacobianMatrix jacobian(const Ideal& I) {
    JacobianMatrix jac;
    const auto n = static_cast<int>(I.ring->size());
    jac.rows.reserve(I.gens.size());
    for (const auto& g : I.gens) {
        std::vector<Polynomial> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) row.push_back(g.derivative(v));
        jac.rows.push_back(std::move(row));
    }
    return jac;
}

namespace {

// Bareiss fraction-free determinant of a square polynomial matrix.
Polynomial poly_det(std::vector<std::vector<Polynomial>> m, const RingPtr& ring, Budget& budget) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(ring, Rat(1));
    Polynomial prev = Polynomial::constant(ring, Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial::zero(ring);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                budget.charge();
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(num, prev);
            }
            m[i][k] = Polynomial::zero(ring);
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace

Ideal jacobian_minors_ideal(const Ideal& I, int size, Budget budget) {
    JacobianMatrix jac = jacobian(I);
    const auto rows = jac.rows.size();
    const auto cols = I.ring->size();
    const auto k = static_cast<std::size_t>(size);
    if (size <= 0) throw std::invalid_argument("minor size must be positive");
    std::vector<Polynomial> minors;
    if (k > rows || k > cols) return Ideal(I.ring, {});  // no minors: rank < size everywhere
    combinations(rows, k, [&](const std::vector<std::size_t>& ri) {
        combinations(cols, k, [&](const std::vector<std::size_t>& ci) {
            std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>());
            for (std::size_t a = 0; a < k; ++a) {
                sub[a].reserve(k);
                for (std::size_t b = 0; b < k; ++b) sub[a].push_back(jac.rows[ri[a]][ci[b]]);
            }
            Polynomial det = poly_det(std::move(sub), I.ring, budget);
            if (det.is_zero()) return;
            det = det.primitive_part();
            for (const auto& m : minors)
                if (m == det) return;
            minors.push_back(std::move(det));
        });
    });
    return Ideal(I.ring, std::move(minors));
}

int jacobian_rank_at(const JacobianMatrix& jac, const std::vector<Rat>& point) {
    std::vector<std::vector<Rat>> m;
    m.reserve(jac.rows.size());
    for (const auto& row : jac.rows) {
        std::vector<Rat> r;
        r.reserve(row.size());
        for (const auto& p : row) r.push_back(p.eval(point));
        m.push_back(std::move(r));
    }
    // plain Gaussian elimination over Q
    int rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (is_zero(m[i][c])) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

int jacobian_generic_rank_mod(const JacobianMatrix& jac, const Ideal& prime, Budget budget) {
    GroebnerBasis gb = buchberger(prime, MonomialOrder::degrevlex(), budget);
    auto nf = [&](const Polynomial& p) { return normal_form(p, gb, budget); };
    std::vector<std::vector<Polynomial>> m;
    m.reserve(jac.rows.size());
    for (const auto& row : jac.rows) {
        std::vector<Polynomial> r;
        r.reserve(row.size());
        for (const auto& p : row) r.push_back(nf(p));
        m.push_back(std::move(r));
    }
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            // cross-multiplied elimination stays in the coordinate ring
            for (std::size_t j = c + 1; j < cols; ++j) {
                budget.charge();
                m[i][j] = nf(m[i][j] * m[r][c] - m[i][c] * m[r][j]);
            }
            m[i][c] = Polynomial::zero(prime.ring);
        }
        ++r;
        ++rank;
    }
    return rank;
}

SingularityReport singular_locus(const Ideal& I, std::optional<int> codim, std::uint64_t seed,
                                 Budget budget) {
    SingularityReport rep;
    rep.seed = seed;
    rep.source_ideal = slim_generators(Ideal(I.ring, canonical_generators(I, budget)), budget);
    rep.source_dim = dimension(I, budget);
    const int n = static_cast<int>(I.ring->size());
    rep.minors_size = codim ? *codim : n - rep.source_dim;
    rep.minors_ideal = jacobian_minors_ideal(rep.source_ideal, rep.minors_size, budget);
    rep.singular_ideal = ideal_sum(rep.source_ideal, rep.minors_ideal);
    if (is_unit_ideal(rep.singular_ideal, budget)) {
        rep.locus_empty = true;
        rep.locus_zero_dimensional = true;
        return rep;
    }
    rep.singular_ideal = Ideal(I.ring, canonical_generators(rep.singular_ideal, budget));
    int d = dimension(rep.singular_ideal, budget);
    rep.locus_zero_dimensional = (d == 0);
    if (rep.locus_zero_dimensional)
        rep.points = solve_zero_dim(rep.singular_ideal, seed, budget);
    return rep;
}

Classification classify(const SingularityReport& report, const Decomposition& decomp,
                        const RealDimProbeResult& probe, Budget budget) {
    Classification out;
    out.seed = report.seed;
    out.primary_count = static_cast<int>(decomp.components.size());

    // minimal primes: associated primes not strictly containing another
    auto inclusions = component_inclusions(decomp, budget);
    out.embedded_pattern = !inclusions.empty();
    std::vector<bool> embedded(decomp.components.size(), false);
    for (auto& [i, j] : inclusions) embedded[i] = true;
    out.minimal_prime_count = 0;
    for (std::size_t i = 0; i < decomp.components.size(); ++i)
        if (!embedded[i]) ++out.minimal_prime_count;

    Ideal rad = decomp.components.empty() ? decomp.input : decomp.components[0].associated_prime;
    {
        std::optional<Ideal> acc;
        for (const auto& c : decomp.components)
            acc = acc ? ideal_intersect(*acc, c.associated_prime, budget) : c.associated_prime;
        if (acc) rad = *acc;
    }
    out.non_radical = !ideal_equal(rad, decomp.input, budget);

    JacobianMatrix jac = jacobian(report.source_ideal);

    if (report.points) {
        for (const auto& pt : report.points->rational_points) {
            PointClassification pc;
            pc.point = pt;
            pc.rank_at_point = jacobian_rank_at(jac, pt.coords);

            // locate the components through the point
            int best_generic_rank = -1;
            bool on_positive_dim = false;
            for (std::size_t ci = 0; ci < decomp.components.size(); ++ci) {
                const auto& comp = decomp.components[ci];
                bool contains = true;
                for (const auto& g : comp.associated_prime.gens)
                    if (!is_zero(g.eval(pt.coords))) {
                        contains = false;
                        break;
                    }
                if (!contains) continue;
                if (embedded[ci] && !comp.is_prime) pc.embedded_double_point = true;
                if (comp.dim >= 1) {
                    on_positive_dim = true;
                    int gr = jacobian_generic_rank_mod(jac, comp.associated_prime, budget);
                    best_generic_rank = std::max(best_generic_rank, gr);
                }
            }
            pc.generic_rank = best_generic_rank;
            // KS: on a positive-dimensional real component with a rank drop.
            // The real point itself witnesses that the component is real.
            if (on_positive_dim && probe.real_points_isolated == Isolated::No &&
                pc.rank_at_point < best_generic_rank)
                pc.kinematic_singularity = true;
            out.points.push_back(std::move(pc));
        }
    }

    // Remark-3 shakiness: non-radical, r == s, and a non-prime primary with a
    // real solution.
    bool remark3 = false;
    if (out.non_radical && out.primary_count == out.minimal_prime_count) {
        for (const auto& comp : decomp.components) {
            if (comp.is_prime) continue;
            if (comp.dim == 0) {
                ZeroDimSolution sol = solve_zero_dim(comp.primary, report.seed, budget);
                if (sol.real_count > 0) remark3 = true;
            } else if (probe.real_points_isolated == Isolated::No) {
                remark3 = true;  // positive-dimensional real branch
            }
        }
    }
    // Real-vs-complex dimension deficit: a smooth real point that is an AS of
    // the complex variety (stretched-linkage pattern).
    bool deficit = probe.complex_dim >= 1 && probe.real_points_isolated == Isolated::Yes;
    out.shaky = remark3 || deficit;
    out.indeterminate = probe.real_points_isolated == Isolated::Unknown;
    return out;
}

int pluecker_rank(const std::vector<DQ>& axes) {
    std::vector<std::vector<Rat>> m(6, std::vector<Rat>(axes.size(), Rat(0)));
    for (std::size_t j = 0; j < axes.size(); ++j) {
        const DQ& h = axes[j];
        m[0][j] = h.c[1];
        m[1][j] = h.c[2];
        m[2][j] = h.c[3];
        m[3][j] = h.c[5];
        m[4][j] = h.c[6];
        m[5][j] = h.c[7];
    }
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < axes.size() && r < 6; ++c) {
        std::size_t piv = r;
        while (piv < 6 && is_zero(m[piv][c])) ++piv;
        if (piv == 6) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < 6; ++i) {
            if (is_zero(m[i][c])) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t jj = c; jj < axes.size(); ++jj) m[i][jj] -= f * m[r][jj];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace cspace
