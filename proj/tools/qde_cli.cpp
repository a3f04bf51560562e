#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "qde/ensemble.hpp"
#include "qde/entropy.hpp"
#include "qde/gates.hpp"
#include "qde/io.hpp"

using namespace qde;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitClaimMismatch = 3;
constexpr int kExitNumerical = 4;

// "FOURIER(3)" / "DEUTSCH(0.785)" / plain names.
GateEntry gate_from_spec(const std::string& spec) {
    const auto open = spec.find('(');
    if (open == std::string::npos) return gate(spec);
    if (spec.back() != ')') throw std::invalid_argument("malformed gate spec: " + spec);
    const std::string name = spec.substr(0, open);
    const std::string arg = spec.substr(open + 1, spec.size() - open - 2);
    return gate(name, {std::stod(arg)});
}

ComplexMatrix resolve_unitary(const std::string& unitary_path, const std::string& gate_name) {
    if (!unitary_path.empty() && !gate_name.empty())
        throw std::invalid_argument("give either --unitary or --gate, not both");
    if (!unitary_path.empty()) return io::load_matrix(unitary_path);
    if (!gate_name.empty()) return gate_from_spec(gate_name).matrix;
    throw std::invalid_argument("an input unitary is required (--unitary or --gate)");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    return f;
}

void write_regions(std::ostream& os, const std::vector<TraceRegion>& regions, int samples) {
    os << "region_index,t,re,im\n";
    char line[128];
    for (size_t ri = 0; ri < regions.size(); ++ri) {
        const auto& b = regions[ri].boundary;
        for (size_t i = 0; i < b.size(); ++i) {
            const double t = i + 1 == b.size()
                                 ? 2.0 * M_PI
                                 : 2.0 * M_PI * static_cast<double>(i) / samples;
            std::snprintf(line, sizeof(line), "%zu,%.9g,%.9g,%.9g\n", ri, t, b[i].real(),
                          b[i].imag());
            os << line;
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"quantum dynamical entropy of unitaries: entropies, chaoticity tests, "
                 "Haar-ensemble statistics"};
    app.require_subcommand(1);

    std::string unitary_path, gate_name, povm_path, out_path, fig, stat;
    long samples = 0, steps = 0;
    int dim = 2, starts = 32, max_iters = 2000, workers = 1, quad_points = 2048;
    int r_points = 1024, theta_points = 2048;
    uint64_t seed = 0;
    double tol = 1e-10;

    auto* c_entropy = app.add_subcommand("entropy", "entropy rate of (U, Pi)");
    c_entropy->add_option("--unitary", unitary_path);
    c_entropy->add_option("--gate", gate_name);
    c_entropy->add_option("--povm", povm_path)->required();

    auto* c_maxent = app.add_subcommand("maxent", "PVM-dynamical entropy by multistart ascent");
    c_maxent->add_option("--unitary", unitary_path);
    c_maxent->add_option("--gate", gate_name);
    c_maxent->add_option("--starts", starts);
    c_maxent->add_option("--seed", seed);
    c_maxent->add_option("--tol", tol);
    c_maxent->add_option("--max-iters", max_iters);

    auto* c_classify = app.add_subcommand("classify", "chaoticity verdict");
    c_classify->add_option("--unitary", unitary_path);
    c_classify->add_option("--gate", gate_name);

    auto* c_curve = app.add_subcommand("curve", "figure data as CSV");
    c_curve->add_option("--fig", fig, "1 | 3 | 4 | hdyn-theta | region")->required();
    c_curve->add_option("--samples", samples);
    c_curve->add_option("--dim", dim);
    c_curve->add_option("--out", out_path);

    auto* c_haar = app.add_subcommand("haar", "Monte Carlo over the unitary group");
    c_haar->add_option("--dim", dim)->required();
    c_haar->add_option("--stat", stat, "volume | mean-fixed | mean-maxent | mean-hdyn2")
        ->required();
    c_haar->add_option("--samples", samples)->required();
    c_haar->add_option("--seed", seed);
    c_haar->add_option("--workers", workers);
    c_haar->add_option("--starts", starts);

    auto* c_weyl = app.add_subcommand("weyl", "Weyl-formula quadrature");
    c_weyl->add_option("--dim", dim)->required();
    c_weyl->add_option("--stat", stat, "volume | mean-hdyn2 | normalization")->required();
    c_weyl->add_option("--quad-points", quad_points);
    c_weyl->add_option("--r-points", r_points);
    c_weyl->add_option("--theta-points", theta_points);

    auto* c_gates = app.add_subcommand("gates", "classify the named gate catalogue");
    c_gates->add_option("--out", out_path);

    auto* c_simulate = app.add_subcommand("simulate", "empirical vs exact entropy rate");
    c_simulate->add_option("--unitary", unitary_path);
    c_simulate->add_option("--gate", gate_name);
    c_simulate->add_option("--povm", povm_path)->required();
    c_simulate->add_option("--steps", steps)->required();
    c_simulate->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;  // help exits clean, bad flags exit 2
    }

    if (c_entropy->parsed()) {
        const ComplexMatrix u = resolve_unitary(unitary_path, gate_name);
        const RankOnePOVM povm = io::load_povm(povm_path);
        if (u.dim() != povm.dim()) throw std::invalid_argument("dimension mismatch");
        const EntropyReport r = dynamical_entropy(u, povm);
        emit(json{{"rate", io::number(r.rate)},
                  {"measurement", io::number(r.measurement)},
                  {"dynamical", io::number(r.dynamical)}});
        return 0;
    }

    if (c_maxent->parsed()) {
        const ComplexMatrix u = resolve_unitary(unitary_path, gate_name);
        MaxEntOptions opts;
        opts.starts = starts;
        opts.seed = seed;
        opts.tol = tol;
        opts.max_iters = max_iters;
        const MaxEntResult r = pvm_dynamical_entropy(u, opts);
        emit(json{{"value", io::number(r.value)},
                  {"basis", io::matrix_to_json(r.basis)},
                  {"certified_chaotic", r.certified_chaotic},
                  {"starts_used", r.starts_used},
                  {"converged_starts", r.converged_starts},
                  {"seed", seed}});
        return 0;
    }

    if (c_classify->parsed()) {
        const ComplexMatrix u = resolve_unitary(unitary_path, gate_name);
        emit(io::verdict_to_json(classify(u)));
        return 0;
    }

    if (c_curve->parsed()) {
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!out_path.empty()) {
            file = open_out(out_path);
            os = &file;
        }
        if (fig == "1" || fig == "hdyn-theta") {
            const long n = samples > 0 ? samples : 1000;
            *os << "theta,hdyn\n";
            char line[64];
            for (long i = 0; i <= n; ++i) {
                const double theta = M_PI * static_cast<double>(i) / static_cast<double>(n);
                const ComplexMatrix u =
                    ComplexMatrix::diagonal({Complex(1.0), std::polar(1.0, theta)});
                std::snprintf(line, sizeof(line), "%.9g,%.9g\n", theta, hdyn_closed_form_d2(u));
                *os << line;
            }
            return 0;
        }
        if (fig == "3" || fig == "4" || fig == "region") {
            const int d = fig == "3" ? 3 : fig == "4" ? 5 : dim;
            if (d != 3 && d != 5)
                throw std::invalid_argument("region curves exist for dim 3 and 5");
            const int n = samples > 0 ? static_cast<int>(samples) : 4096;
            std::vector<TraceRegion> regions = {TraceRegion::make(d, 1.0, Complex(1.0), n)};
            for (TraceRegion& lobe : ct_region(d, n)) regions.push_back(std::move(lobe));
            write_regions(*os, regions, n);
            return 0;
        }
        throw std::invalid_argument("unknown figure selector: " + fig);
    }

    if (c_haar->parsed()) {
        McEstimate e;
        if (stat == "volume") {
            e = mc_chaotic_volume(dim, samples, seed, workers);
        } else if (stat == "mean-fixed") {
            e = mc_mean_fixed_pvm(dim, samples, seed, workers);
        } else if (stat == "mean-hdyn2") {
            if (dim != 2) throw std::invalid_argument("mean-hdyn2 is a d=2 statistic");
            e = mc_mean_hdyn_d2(samples, seed, workers);
        } else if (stat == "mean-maxent") {
            MaxEntOptions opts;
            opts.starts = starts;
            e = mc_mean_maxent(dim, samples, seed, opts, workers);
        } else {
            throw std::invalid_argument("unknown statistic: " + stat);
        }
        emit(io::estimate_to_json(e));
        return 0;
    }

    if (c_weyl->parsed()) {
        double value = 0.0;
        if (dim == 2) {
            if (stat == "volume")
                value = weyl_volume_d2(quad_points);
            else if (stat == "mean-hdyn2")
                value = weyl_mean_hdyn_d2(quad_points);
            else if (stat == "normalization")
                value = weyl_average_d2([](double) { return 1.0; }, quad_points);
            else
                throw std::invalid_argument("unknown statistic: " + stat);
        } else if (dim == 3) {
            const PolarGrid grid{r_points, theta_points};
            if (stat == "volume")
                value = m_c3_quadrature(grid);
            else if (stat == "normalization")
                value = t3_density_normalization(grid);
            else
                throw std::invalid_argument("unsupported (dim, stat) pair");
        } else {
            throw std::invalid_argument("weyl quadrature supports dim 2 and 3");
        }
        emit(json{{"dim", dim}, {"stat", stat}, {"value", io::number(value)}});
        return 0;
    }

    if (c_gates->parsed()) {
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!out_path.empty()) {
            file = open_out(out_path);
            os = &file;
        }
        *os << "name,dim,paper_claim,verdict,method,detail\n";
        std::string mismatch;
        char line[192];
        for (const auto& [entry, verdict] : classify_catalogue()) {
            std::snprintf(line, sizeof(line), "%s,%d,%s,%s,%s,%.9g\n", entry.name.c_str(),
                          entry.dim, to_string(entry.paper_claim).c_str(),
                          to_string(verdict.status).c_str(), to_string(verdict.method).c_str(),
                          verdict.detail);
            *os << line;
            const bool claim_chaotic = entry.paper_claim == PaperClaim::Chaotic;
            const bool claim_not = entry.paper_claim == PaperClaim::NotChaotic;
            if ((claim_chaotic && verdict.status != ChaosStatus::Chaotic) ||
                (claim_not && verdict.status != ChaosStatus::NotChaotic))
                mismatch = entry.name;
        }
        if (!mismatch.empty()) {
            std::cerr << "verdict disagrees with the recorded claim for gate " << mismatch << "\n";
            return kExitClaimMismatch;
        }
        return 0;
    }

    if (c_simulate->parsed()) {
        const ComplexMatrix u = resolve_unitary(unitary_path, gate_name);
        const RankOnePOVM povm = io::load_povm(povm_path);
        if (u.dim() != povm.dim()) throw std::invalid_argument("dimension mismatch");
        const double exact = entropy_rate(u, povm);
        const double empirical = empirical_entropy_rate(u, povm, steps, seed);
        emit(json{{"empirical_rate", io::number(empirical)},
                  {"exact_rate", io::number(exact)},
                  {"abs_error", io::number(std::abs(empirical - exact))},
                  {"steps", steps},
                  {"seed", seed}});
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const RootFindingError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
