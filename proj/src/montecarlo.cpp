#include "dtrw/montecarlo.hpp"

#include <cmath>

#include "dtrw/boundary.hpp"
#include "dtrw/weights.hpp"

namespace dtrw {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t particle, std::uint64_t step) {
    std::uint64_t h = splitmix64(seed ^ 0xA5A5A5A5A5A5A5A5ULL);
    h = splitmix64(h ^ particle);
    h = splitmix64(h ^ step);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::vector<double> simulate_ensemble(const EnsembleConfig& config, int initial_site) {
    if (config.force.kind != ForceKind::prescribed)
        throw ConfigInvalid("simulate_ensemble: force must be prescribed");
    if (config.n_particles < 1)
        throw ConfigInvalid("simulate_ensemble: need at least one particle");
    const int m = config.lattice.n_sites;
    if (initial_site < 0 || initial_site >= m)
        throw ConfigInvalid("simulate_ensemble: initial site out of range");

    // Jump probabilities on the ring, one table per step; step n uses
    // forces at time (n-1)*dt, matching the master equation.
    std::vector<std::vector<double>> p_right(config.n_steps);
    std::vector<double> f(m);
    for (long n = 0; n < config.n_steps; ++n) {
        const double t = n * config.dt;
        for (int i = 0; i < m; ++i)
            f[i] = config.force.evaluate(config.lattice.site(i), t, 0.0);
        p_right[n].resize(m);
        for (int i = 0; i < m; ++i) {
            if (config.quadrature == QuadratureRule::single_point) {
                p_right[n][i] = boltzmann_single(f, i, config.lattice.dx, config.beta);
            } else {
                const double exponent = 0.5 * config.beta * config.lattice.dx *
                                        (f[ring_index(i - 1, m)] + 2.0 * f[i] +
                                         f[ring_index(i + 1, m)]);
                p_right[n][i] = stable_logistic(exponent);
            }
        }
    }

    std::vector<long> counts(m, 0);
    for (long particle = 0; particle < config.n_particles; ++particle) {
        int site = initial_site;
        for (long n = 0; n < config.n_steps; ++n) {
            const double u = counter_uniform(config.seed, static_cast<std::uint64_t>(particle),
                                             static_cast<std::uint64_t>(n));
            site = ring_index(u < p_right[n][site] ? site + 1 : site - 1, m);
        }
        ++counts[site];
    }

    std::vector<double> density(m);
    for (int i = 0; i < m; ++i)
        density[i] = static_cast<double>(counts[i]) / static_cast<double>(config.n_particles);
    return density;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw LengthMismatch("tv_distance: length mismatch");
    double sp = 0.0, sq = 0.0;
    for (double v : p) sp += v;
    for (double v : q) sq += v;
    if (!(sp > 0.0) || !(sq > 0.0))
        throw ConfigInvalid("tv_distance: inputs must have positive mass");
    if (std::abs(sp - sq) > 1e-9 * std::max(sp, sq))
        throw ConfigInvalid("tv_distance: inputs must carry the same total mass");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        d += std::abs(p[i] / sp - q[i] / sq);
    return 0.5 * d;
}

} // namespace dtrw
