#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qde/ensemble.hpp"
#include "qde/entropy.hpp"
#include "qde/gates.hpp"

namespace py = pybind11;
using namespace qde;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw std::invalid_argument("expected a square 2-D complex array");
    const int d = static_cast<int>(arr.shape(0));
    ComplexMatrix m(d);
    auto r = arr.unchecked<2>();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = r(i, j);
    return m;
}

py::array_t<std::complex<double>> from_matrix(const ComplexMatrix& m) {
    py::array_t<std::complex<double>> arr({m.dim(), m.dim()});
    auto w = arr.mutable_unchecked<2>();
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) w(i, j) = m(i, j);
    return arr;
}

RankOnePOVM to_povm(const CArray& vectors) {
    if (vectors.ndim() != 2) throw std::invalid_argument("expected a (k, d) complex array");
    const int k = static_cast<int>(vectors.shape(0));
    const int d = static_cast<int>(vectors.shape(1));
    auto r = vectors.unchecked<2>();
    std::vector<std::vector<Complex>> vecs(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        vecs[static_cast<size_t>(j)].resize(static_cast<size_t>(d));
        for (int c = 0; c < d; ++c) vecs[static_cast<size_t>(j)][static_cast<size_t>(c)] = r(j, c);
    }
    return RankOnePOVM::validate(std::move(vecs), d);
}

py::array_t<std::complex<double>> povm_vectors(const RankOnePOVM& povm) {
    py::array_t<std::complex<double>> arr({povm.outcome_count(), povm.dim()});
    auto w = arr.mutable_unchecked<2>();
    for (int j = 0; j < povm.outcome_count(); ++j)
        for (int c = 0; c < povm.dim(); ++c) w(j, c) = povm.vector(j)[static_cast<size_t>(c)];
    return arr;
}

py::dict estimate_dict(const McEstimate& e) {
    py::dict d;
    d["mean"] = e.mean;
    d["std_error"] = e.std_error;
    d["samples"] = e.samples;
    d["seed"] = e.seed;
    d["worker_count"] = e.worker_count;
    return d;
}

py::dict verdict_dict(const ChaosVerdict& v) {
    py::dict d;
    d["status"] = to_string(v.status);
    d["method"] = to_string(v.method);
    d["detail"] = v.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qde, m) {
    m.doc() = "Quantum dynamical entropy of unitaries: entropy rates under rank-1 "
              "PVM/POVM measurements, chaoticity tests, and Haar-ensemble statistics.";

    m.def("shannon_eta", &shannon_eta, py::arg("x"), "-x ln x with eta(0) = 0.");

    m.def(
        "entropy_rate",
        [](const CArray& u, const CArray& povm) { return entropy_rate(to_matrix(u), to_povm(povm)); },
        py::arg("unitary"), py::arg("povm_vectors"),
        "Entropy rate H(U, Pi) in nats; povm_vectors is a (k, d) array of unit vectors.");

    m.def(
        "measurement_entropy",
        [](const CArray& povm) { return measurement_entropy(to_povm(povm)); },
        py::arg("povm_vectors"), "H(I, Pi); zero exactly for PVMs.");

    m.def(
        "dynamical_entropy",
        [](const CArray& u, const CArray& povm) {
            const EntropyReport r = dynamical_entropy(to_matrix(u), to_povm(povm));
            py::dict d;
            d["rate"] = r.rate;
            d["measurement"] = r.measurement;
            d["dynamical"] = r.dynamical;
            return d;
        },
        py::arg("unitary"), py::arg("povm_vectors"));

    m.def(
        "state_entropy",
        [](const CArray& rho, const CArray& povm) {
            return state_entropy(State::validate(to_matrix(rho)), to_povm(povm));
        },
        py::arg("rho"), py::arg("povm_vectors"));

    m.def(
        "transition_matrix",
        [](const CArray& u, const CArray& povm) {
            const TransitionMatrix t = transition_matrix(to_matrix(u), to_povm(povm));
            py::array_t<double> arr({t.k, t.k});
            auto w = arr.mutable_unchecked<2>();
            for (int j = 0; j < t.k; ++j)
                for (int l = 0; l < t.k; ++l) w(j, l) = t.at(j, l);
            return arr;
        },
        py::arg("unitary"), py::arg("povm_vectors"),
        "Row-stochastic matrix p_jl = (d/k)|<phi_j|U|phi_l>|^2.");

    m.def(
        "block_entropies",
        [](const CArray& u, const CArray& povm, int n_max) {
            const BlockEntropySeries s = block_entropies(to_matrix(u), to_povm(povm), n_max);
            return py::make_tuple(s.values, s.differences);
        },
        py::arg("unitary"), py::arg("povm_vectors"), py::arg("n_max"),
        "(H_1..H_n, successive differences) by exhaustive string enumeration.");

    m.def(
        "empirical_entropy_rate",
        [](const CArray& u, const CArray& povm, long steps, uint64_t seed) {
            return empirical_entropy_rate(to_matrix(u), to_povm(povm), steps, seed);
        },
        py::arg("unitary"), py::arg("povm_vectors"), py::arg("steps"), py::arg("seed") = 0);

    m.def(
        "sic_povm", [](int dim) { return povm_vectors(sic_povm(dim)); }, py::arg("dim"),
        "SIC-POVM vectors for dim 2 (tetrahedral) or 3 (Weyl-Heisenberg).");

    m.def(
        "pvm_from_unitary",
        [](const CArray& basis) { return povm_vectors(RankOnePOVM::from_unitary(to_matrix(basis))); },
        py::arg("basis"), "Columns of a unitary as PVM vectors (dephased).");

    m.def(
        "dim2_spectrum",
        [](const CArray& u) {
            const Dim2Spectrum s = dim2_spectrum(to_matrix(u));
            return py::make_tuple(s.theta, s.c);
        },
        py::arg("unitary"), "(theta, sin^2(theta/2)) for a 2x2 unitary.");

    m.def(
        "hdyn_closed_form_d2",
        [](const CArray& u) { return hdyn_closed_form_d2(to_matrix(u)); }, py::arg("unitary"),
        "Closed-form PVM-dynamical entropy of a qubit unitary.");

    m.def(
        "maximizing_basis_d2",
        [](const CArray& u, double tau) { return from_matrix(maximizing_basis_d2(to_matrix(u), tau)); },
        py::arg("unitary"), py::arg("tau") = 0.0);

    m.def(
        "pvm_dynamical_entropy",
        [](const CArray& u, int starts, double tol, uint64_t seed, int max_iters) {
            MaxEntOptions opts;
            opts.starts = starts;
            opts.tol = tol;
            opts.seed = seed;
            opts.max_iters = max_iters;
            const MaxEntResult r = pvm_dynamical_entropy(to_matrix(u), opts);
            py::dict d;
            d["value"] = r.value;
            d["basis"] = from_matrix(r.basis);
            d["certified_chaotic"] = r.certified_chaotic;
            d["starts_used"] = r.starts_used;
            d["converged_starts"] = r.converged_starts;
            return d;
        },
        py::arg("unitary"), py::arg("starts") = 32, py::arg("tol") = 1e-10, py::arg("seed") = 0,
        py::arg("max_iters") = 2000,
        "Multistart ascent for H^dyn(U) = max over bases of the entropy rate.");

    m.def(
        "classify", [](const CArray& u) { return verdict_dict(classify(to_matrix(u))); },
        py::arg("unitary"), "Chaoticity verdict: status, method, detail.");

    m.def(
        "hadamard_defect",
        [](const CArray& u, const CArray& basis) {
            const HadamardWitness w = hadamard_defect(to_matrix(u), to_matrix(basis));
            return py::make_tuple(w.defect, w.sum_slack);
        },
        py::arg("unitary"), py::arg("basis"));

    m.def(
        "hypocycloid_point", [](int d, double t) { return hypocycloid_point(d, t); }, py::arg("d"),
        py::arg("t"));

    m.def(
        "in_t3",
        [](std::complex<double> tau, double tol) {
            switch (in_T3(tau, tol)) {
                case RegionLocation::Inside: return "Inside";
                case RegionLocation::Boundary: return "Boundary";
                default: return "Outside";
            }
        },
        py::arg("tau"), py::arg("tol") = 1e-9, "Membership of tau in the SU(3) trace region.");

    m.def("trace_density_d3", &trace_density_d3, py::arg("tau"),
          "Haar pushforward density of tr U on SU(3).");

    m.def(
        "gate",
        [](const std::string& name, const std::vector<double>& params) {
            const GateEntry e = gate(name, params);
            py::dict d;
            d["name"] = e.name;
            d["dim"] = e.dim;
            d["matrix"] = from_matrix(e.matrix);
            d["paper_claim"] = to_string(e.paper_claim);
            return d;
        },
        py::arg("name"), py::arg("params") = std::vector<double>{},
        "Named gate matrix with its chaoticity claim.");

    m.def("classify_catalogue", [] {
        py::list out;
        for (const auto& [entry, verdict] : classify_catalogue()) {
            py::dict d;
            d["name"] = entry.name;
            d["dim"] = entry.dim;
            d["paper_claim"] = to_string(entry.paper_claim);
            d["verdict"] = verdict_dict(verdict);
            out.append(std::move(d));
        }
        return out;
    });

    py::class_<HaarSampler>(m, "HaarSampler", "Seeded stream of Haar-random unitaries.")
        .def(py::init<int, uint64_t>(), py::arg("dim"), py::arg("seed"))
        .def("next", [](HaarSampler& s) { return from_matrix(s.next()); })
        .def_property_readonly("dim", &HaarSampler::dim);

    m.def("weyl_volume_d2", &weyl_volume_d2, py::arg("quad_points") = 2048,
          "m(C_2) by Weyl-formula quadrature.");
    m.def("weyl_mean_hdyn_d2", &weyl_mean_hdyn_d2, py::arg("quad_points") = 2048,
          "<H^dyn>_U(2) by Weyl-formula quadrature.");
    m.def(
        "m_c3_quadrature",
        [](int r_points, int theta_points) { return m_c3_quadrature({r_points, theta_points}); },
        py::arg("r_points") = 1024, py::arg("theta_points") = 2048,
        "m(C_3) by polar quadrature over CT_3.");
    m.def(
        "t3_density_normalization",
        [](int r_points, int theta_points) {
            return t3_density_normalization({r_points, theta_points});
        },
        py::arg("r_points") = 1024, py::arg("theta_points") = 2048);

    m.def(
        "mc_chaotic_volume",
        [](int d, long samples, uint64_t seed, int workers) {
            return estimate_dict(mc_chaotic_volume(d, samples, seed, workers));
        },
        py::arg("dim"), py::arg("samples"), py::arg("seed") = 0, py::arg("workers") = 1);
    m.def(
        "mc_mean_hdyn_d2",
        [](long samples, uint64_t seed, int workers) {
            return estimate_dict(mc_mean_hdyn_d2(samples, seed, workers));
        },
        py::arg("samples"), py::arg("seed") = 0, py::arg("workers") = 1);
    m.def(
        "mc_mean_fixed_pvm",
        [](int d, long samples, uint64_t seed, int workers) {
            return estimate_dict(mc_mean_fixed_pvm(d, samples, seed, workers));
        },
        py::arg("dim"), py::arg("samples"), py::arg("seed") = 0, py::arg("workers") = 1);
    m.def(
        "mc_mean_maxent",
        [](int d, long samples, uint64_t seed, int starts, int workers) {
            MaxEntOptions opts;
            opts.starts = starts;
            return estimate_dict(mc_mean_maxent(d, samples, seed, opts, workers));
        },
        py::arg("dim"), py::arg("samples"), py::arg("seed") = 0, py::arg("starts") = 32,
        py::arg("workers") = 1);
}
