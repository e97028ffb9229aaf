#include "dtrw/oracle.hpp"

#include <cmath>

namespace dtrw {

double tanh_solution_eval(const TanhSolution& sol, double x, double t) {
    return (sol.C2 + 2.0 * sol.nu * sol.C1 * sol.C1 * std::tanh(t * sol.C2 - x * sol.C1 + sol.C3)) /
           sol.C1;
}

namespace {

// 4th-order central first and second derivatives.
template <typename F>
double d1(F f, double z, double h) {
    return (-f(z + 2 * h) + 8 * f(z + h) - 8 * f(z - h) + f(z - 2 * h)) / (12 * h);
}

template <typename F>
double d2(F f, double z, double h) {
    return (-f(z + 2 * h) + 16 * f(z + h) - 30 * f(z) + 16 * f(z - h) - f(z - 2 * h)) /
           (12 * h * h);
}

} // namespace

double residual_check(const TanhSolution& sol, const Lattice& sample_grid, double t) {
    const double hx = 1e-3;
    const double ht = 1e-3;
    double worst = 0.0;
    for (int i = 0; i < sample_grid.n_sites; ++i) {
        const double x = sample_grid.site(i);
        auto in_x = [&](double xx) { return tanh_solution_eval(sol, xx, t); };
        auto in_t = [&](double tt) { return tanh_solution_eval(sol, x, tt); };
        const double u = tanh_solution_eval(sol, x, t);
        const double r = d1(in_t, t, ht) - sol.nu * d2(in_x, x, hx) + u * d1(in_x, x, hx);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

std::vector<double> hopf_cole_transform(std::span<const double> phi_values, double dx, double nu) {
    const std::size_t n = phi_values.size();
    if (n < 3) throw ConfigInvalid("hopf_cole_transform: need at least 3 samples");
    for (double p : phi_values)
        if (!(p > 0.0)) throw NonPositivePhi("hopf_cole_transform: phi must be positive");

    std::vector<double> u(n);
    u[0] = -2.0 * nu * (phi_values[1] - phi_values[0]) / (dx * phi_values[0]);
    for (std::size_t i = 1; i + 1 < n; ++i)
        u[i] = -2.0 * nu * (phi_values[i + 1] - phi_values[i - 1]) / (2.0 * dx * phi_values[i]);
    u[n - 1] = -2.0 * nu * (phi_values[n - 1] - phi_values[n - 2]) / (dx * phi_values[n - 1]);
    return u;
}

double l1_error(const Field& numeric, std::span<const double> exact_at_sites, double dx) {
    if (numeric.values.size() != exact_at_sites.size())
        throw LengthMismatch("l1_error: field and exact samples differ in length");
    double sum = 0.0;
    for (std::size_t i = 0; i < exact_at_sites.size(); ++i)
        sum += std::abs(numeric.values[i] - exact_at_sites[i]);
    return dx * sum;
}

double convergence_order(std::span<const ErrorRecord> records) {
    if (records.size() < 3)
        throw DegenerateFit("convergence_order: need at least 3 records");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(records.size());
    for (const auto& r : records) {
        const double lx = std::log(r.dx);
        const double ly = std::log(r.l1_error);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12 * std::max(1.0, n * sxx))
        throw DegenerateFit("convergence_order: dx values are not distinct");
    return (n * sxy - sx * sy) / denom;
}

double gaussian_solution_eval(const GaussianSolution& sol, double x, double t) {
    const double s = 4.0 * sol.diffusivity * (t + sol.t0);
    const double d = x - sol.x0;
    return sol.mass / std::sqrt(M_PI * s) * std::exp(-d * d / s);
}

} // namespace dtrw
