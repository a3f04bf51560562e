#include "qde/ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qde/chaos.hpp"
#include "qde/entropy.hpp"
#include "qde/measure.hpp"

namespace qde {

double weyl_average_d2_arc(const std::function<double(double)>& f, double lo, double hi,
                           int quad_points) {
    if (quad_points < 1) throw std::invalid_argument("quadrature needs at least one point");
    const double h = (hi - lo) / quad_points;
    double acc = 0.0;
    for (int i = 0; i < quad_points; ++i) {
        const double phi = lo + (i + 0.5) * h;
        acc += f(phi) * (1.0 - std::cos(phi));
    }
    return acc * h / (2.0 * M_PI);
}

double weyl_average_d2(const std::function<double(double)>& f, int quad_points) {
    return weyl_average_d2_arc(f, 0.0, 2.0 * M_PI, quad_points);
}

double weyl_volume_d2(int quad_points) {
    return weyl_average_d2_arc([](double) { return 1.0; }, M_PI / 2.0, 3.0 * M_PI / 2.0,
                               quad_points);
}

double weyl_mean_hdyn_d2(int quad_points) {
    const auto hdyn = [](double phi) {
        const double theta = std::min(phi, 2.0 * M_PI - phi);
        if (theta >= M_PI / 2.0) return std::log(2.0);
        const double c = std::sin(theta / 2.0) * std::sin(theta / 2.0);
        return shannon_eta(c) + shannon_eta(1.0 - c);
    };
    // The closed form has kinks at pi/2 and 3pi/2; integrate each smooth arc.
    return weyl_average_d2_arc(hdyn, 0.0, M_PI / 2.0, quad_points) +
           weyl_average_d2_arc(hdyn, M_PI / 2.0, 3.0 * M_PI / 2.0, quad_points) +
           weyl_average_d2_arc(hdyn, 3.0 * M_PI / 2.0, 2.0 * M_PI, quad_points);
}

double trace_density_d3(Complex tau) {
    const double r2 = std::norm(tau);
    const double re3 = (tau * tau * tau).real();
    const double radicand = 4.0 + (8.0 / 27.0) * re3 - 3.0 * (1.0 + r2 / 9.0) * (1.0 + r2 / 9.0);
    if (radicand <= 0.0) return 0.0;
    return 3.0 * std::sqrt(3.0) / (2.0 * M_PI * M_PI) * std::sqrt(radicand);
}

namespace {

bool in_ct3(Complex tau, double tol) {
    for (const double rot : {-M_PI / 18.0, M_PI / 18.0}) {
        const Complex z = std::sqrt(3.0) * tau * std::polar(1.0, rot);
        if (in_T3(z, tol) != RegionLocation::Outside) return true;
    }
    return false;
}

double polar_quadrature(const PolarGrid& grid, double r_max,
                        const std::function<bool(Complex)>& keep) {
    if (grid.r_points < 256 || grid.theta_points < 256)
        throw std::invalid_argument("polar grid needs at least 256 points per axis");
    const double dr = r_max / grid.r_points;
    const double dth = 2.0 * M_PI / grid.theta_points;
    double acc = 0.0;
    for (int i = 0; i < grid.r_points; ++i) {
        const double r = (i + 0.5) * dr;
        for (int j = 0; j < grid.theta_points; ++j) {
            const double th = (j + 0.5) * dth;
            const Complex tau = std::polar(r, th);
            const double rho = trace_density_d3(tau);
            if (rho == 0.0) continue;
            if (!keep(tau)) continue;
            acc += rho * r;
        }
    }
    return acc * dr * dth;
}

}  // namespace

double m_c3_quadrature(const PolarGrid& grid) {
    return polar_quadrature(grid, std::sqrt(3.0), [](Complex tau) { return in_ct3(tau, 1e-9); });
}

double m_c3_lobe_quadrature(int rot, const PolarGrid& grid) {
    if (rot != 1 && rot != -1) throw std::invalid_argument("lobe selector must be +1 or -1");
    const double ang = rot > 0 ? -M_PI / 18.0 : M_PI / 18.0;  // undo the lobe rotation
    return polar_quadrature(grid, std::sqrt(3.0), [ang](Complex tau) {
        const Complex z = std::sqrt(3.0) * tau * std::polar(1.0, ang);
        return in_T3(z, 1e-9) != RegionLocation::Outside;
    });
}

double t3_density_normalization(const PolarGrid& grid) {
    return polar_quadrature(grid, 3.0, [](Complex) { return true; });
}

namespace {

McEstimate run_mc(int dim, long samples, uint64_t seed, int workers,
                  const std::function<double(const ComplexMatrix&, SplitMix64&)>& stat) {
    if (workers < 1) throw std::invalid_argument("worker count must be positive");
    if (samples < 1) throw std::invalid_argument("sample count must be positive");

    struct Accum {
        double sum = 0.0, sumsq = 0.0;
    };
    std::vector<Accum> acc(static_cast<size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    const long base = samples / workers;
    const long extra = samples % workers;
    for (int w = 0; w < workers; ++w) {
        const long count = base + (w < extra ? 1 : 0);
        pool.emplace_back([&, w, count] {
            try {
                SplitMix64 rng(SplitMix64::substream(seed, static_cast<uint64_t>(w)));
                Accum local;
                for (long i = 0; i < count; ++i) {
                    const ComplexMatrix u = random_unitary(dim, rng);
                    const double x = stat(u, rng);
                    local.sum += x;
                    local.sumsq += x * x;
                }
                acc[static_cast<size_t>(w)] = local;
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    double sum = 0.0, sumsq = 0.0;
    for (const Accum& a : acc) {
        sum += a.sum;
        sumsq += a.sumsq;
    }
    McEstimate e;
    e.samples = samples;
    e.seed = seed;
    e.worker_count = workers;
    e.mean = sum / samples;
    const double var = samples > 1 ? std::max(0.0, (sumsq - samples * e.mean * e.mean) / (samples - 1))
                                   : 0.0;
    e.std_error = std::sqrt(var / samples);
    return e;
}

}  // namespace

McEstimate mc_chaotic_volume(int d, long samples, uint64_t seed, int workers) {
    if (d != 2 && d != 3) throw std::invalid_argument("chaotic volume is exact only for d = 2, 3");
    ClassifyOptions opts;
    return run_mc(d, samples, seed, workers, [opts](const ComplexMatrix& u, SplitMix64&) {
        return classify(u, opts).status == ChaosStatus::Chaotic ? 1.0 : 0.0;
    });
}

McEstimate mc_mean_hdyn_d2(long samples, uint64_t seed, int workers) {
    return run_mc(2, samples, seed, workers,
                  [](const ComplexMatrix& u, SplitMix64&) { return hdyn_closed_form_d2(u); });
}

McEstimate mc_mean_fixed_pvm(int d, long samples, uint64_t seed, int workers) {
    if (d > 8) throw std::invalid_argument("mc_mean_fixed_pvm supports dim <= 8");
    const RankOnePOVM pvm = RankOnePOVM::from_unitary(ComplexMatrix::identity(d));
    return run_mc(d, samples, seed, workers, [&pvm](const ComplexMatrix& u, SplitMix64&) {
        return entropy_rate(u, pvm);
    });
}

McEstimate mc_mean_maxent(int d, long samples, uint64_t seed, const MaxEntOptions& opts,
                          int workers) {
    if (d > 8) throw std::invalid_argument("mc_mean_maxent supports dim <= 8");
    return run_mc(d, samples, seed, workers, [opts](const ComplexMatrix& u, SplitMix64& rng) {
        MaxEntOptions per = opts;
        per.seed = rng.next();
        return pvm_dynamical_entropy(u, per).value;
    });
}

}  // namespace qde
