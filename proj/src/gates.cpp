#include "qde/gates.hpp"

#include <cmath>
#include <stdexcept>

#include "qde/linalg.hpp"

namespace qde {

namespace {

ComplexMatrix from_rows(int d, std::initializer_list<Complex> entries) {
    ComplexMatrix m(d);
    int i = 0;
    for (const Complex& z : entries) {
        m(i / d, i % d) = z;
        ++i;
    }
    return m;
}

const Complex I1(0.0, 1.0);

ComplexMatrix permutation(int d, std::initializer_list<int> images) {
    ComplexMatrix m(d);
    int col = 0;
    for (int row : images) m(row, col++) = 1.0;
    return m;
}

ComplexMatrix fourier_gate(int d) {
    ComplexMatrix f(d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) {
            const double a = 2.0 * M_PI * ((j * l) % d) / d;
            f(j, l) = s * Complex(std::cos(a), std::sin(a));
        }
    return f;
}

ComplexMatrix deutsch_gate(double theta) {
    ComplexMatrix m = ComplexMatrix::identity(8);
    m(6, 6) = I1 * std::cos(theta);
    m(6, 7) = std::sin(theta);
    m(7, 6) = std::sin(theta);
    m(7, 7) = I1 * std::cos(theta);
    return m;
}

}  // namespace

GateEntry gate(const std::string& name, const std::vector<double>& params) {
    const double isq2 = 1.0 / std::sqrt(2.0);
    if (name == "H")
        return {name, 2, from_rows(2, {isq2, isq2, isq2, -isq2}), PaperClaim::Chaotic};
    if (name == "X")
        return {name, 2, from_rows(2, {0.0, 1.0, 1.0, 0.0}), PaperClaim::Chaotic};
    if (name == "Y")
        return {name, 2, from_rows(2, {0.0, -I1, I1, 0.0}), PaperClaim::Chaotic};
    if (name == "Z")
        return {name, 2, from_rows(2, {1.0, 0.0, 0.0, -1.0}), PaperClaim::Chaotic};
    if (name == "S")  // pi/4 phase shift
        return {name, 2, from_rows(2, {1.0, 0.0, 0.0, I1}), PaperClaim::Chaotic};
    if (name == "T")  // pi/8 phase shift
        return {name, 2, from_rows(2, {1.0, 0.0, 0.0, std::polar(1.0, M_PI / 4.0)}),
                PaperClaim::NotChaotic};
    if (name == "SQRT_NOT")
        return {name, 2,
                from_rows(2, {0.5 * Complex(1.0, 1.0), 0.5 * Complex(1.0, -1.0),
                              0.5 * Complex(1.0, -1.0), 0.5 * Complex(1.0, 1.0)}),
                PaperClaim::Chaotic};
    if (name == "CNOT")
        return {name, 4, permutation(4, {0, 1, 3, 2}), PaperClaim::Chaotic};
    if (name == "CSIGN") {
        ComplexMatrix m = ComplexMatrix::identity(4);
        m(3, 3) = -1.0;
        return {name, 4, m, PaperClaim::Chaotic};
    }
    if (name == "SWAP")
        return {name, 4, permutation(4, {0, 2, 1, 3}), PaperClaim::Chaotic};
    if (name == "ISWAP") {
        ComplexMatrix m(4);
        m(0, 0) = 1.0;
        m(1, 2) = I1;
        m(2, 1) = I1;
        m(3, 3) = 1.0;
        return {name, 4, m, PaperClaim::Chaotic};
    }
    if (name == "SQRT_CNOT") {
        ComplexMatrix m = ComplexMatrix::identity(4);
        m(2, 2) = 0.5 * Complex(1.0, 1.0);
        m(2, 3) = 0.5 * Complex(1.0, -1.0);
        m(3, 2) = 0.5 * Complex(1.0, -1.0);
        m(3, 3) = 0.5 * Complex(1.0, 1.0);
        return {name, 4, m, PaperClaim::NotChaotic};
    }
    if (name == "SQRT_SWAP") {
        ComplexMatrix m = ComplexMatrix::identity(4);
        m(1, 1) = 0.5 * Complex(1.0, 1.0);
        m(1, 2) = 0.5 * Complex(1.0, -1.0);
        m(2, 1) = 0.5 * Complex(1.0, -1.0);
        m(2, 2) = 0.5 * Complex(1.0, 1.0);
        return {name, 4, m, PaperClaim::NotChaotic};
    }
    if (name == "TOFFOLI")
        return {name, 8, permutation(8, {0, 1, 2, 3, 4, 5, 7, 6}), PaperClaim::NotChaotic};
    if (name == "FREDKIN")
        return {name, 8, permutation(8, {0, 1, 2, 3, 4, 6, 5, 7}), PaperClaim::NotChaotic};
    if (name == "DEUTSCH") {
        const double theta = params.empty() ? M_PI / 4.0 : params[0];
        return {"DEUTSCH(" + std::to_string(theta) + ")", 8, deutsch_gate(theta),
                PaperClaim::NotChaotic};
    }
    if (name == "FOURIER") {
        if (params.empty()) throw std::invalid_argument("FOURIER needs the dimension parameter");
        const int d = static_cast<int>(params[0]);
        if (d < 1 || d > 16 || params[0] != d)
            throw std::invalid_argument("FOURIER dimension must be an integer in [1, 16]");
        return {"FOURIER(" + std::to_string(d) + ")", d, fourier_gate(d), PaperClaim::Chaotic};
    }
    throw std::invalid_argument("unknown gate: " + name);
}

GateEntry controlled_gate(const ComplexMatrix& u2) {
    if (u2.dim() != 2) throw std::invalid_argument("controlled gate needs a 2x2 unitary");
    if (!is_unitary(u2, kDefaultUnitaryTol).passed)
        throw std::invalid_argument("controlled gate needs a unitary block");
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(2 + r, 2 + c) = u2(r, c);
    return {"CONTROLLED_U", 4, m, PaperClaim::None};
}

std::vector<std::string> catalogue_names() {
    return {"H",    "X",         "Y",         "Z",       "S",       "T",
            "SQRT_NOT", "CNOT",  "CSIGN",     "SWAP",    "ISWAP",   "SQRT_CNOT",
            "SQRT_SWAP", "TOFFOLI", "FREDKIN", "DEUTSCH", "FOURIER"};
}

std::vector<std::pair<GateEntry, ChaosVerdict>> classify_catalogue() {
    std::vector<GateEntry> entries;
    for (const std::string& name : catalogue_names()) {
        if (name == "DEUTSCH") {
            for (double theta : {M_PI / 6.0, M_PI / 4.0, 2.0 * M_PI / 5.0})
                entries.push_back(gate(name, {theta}));
        } else if (name == "FOURIER") {
            for (int d : {2, 3, 4, 5}) entries.push_back(gate(name, {static_cast<double>(d)}));
        } else {
            entries.push_back(gate(name));
        }
    }
    std::vector<std::pair<GateEntry, ChaosVerdict>> out;
    out.reserve(entries.size());
    for (GateEntry& e : entries) {
        const ChaosVerdict v = classify(e.matrix);
        out.emplace_back(std::move(e), v);
    }
    return out;
}

ChaosVerdict controlled_u_chaotic_test(const ComplexMatrix& u2) {
    const Dim2Spectrum s = dim2_spectrum(u2);  // also validates unitarity
    const GateEntry cu = controlled_gate(u2);
    if (std::abs(s.theta - M_PI) <= 1e-9) {
        // The certificate is genuine: run the optimizer on the 4x4 gate.
        const MaxEntResult m = pvm_dynamical_entropy(cu.matrix);
        return {ChaosStatus::Chaotic, ChaosMethod::OptimizerCertificate, m.value, false};
    }
    const double abstr = std::abs(cu.matrix.trace());
    if (abstr > 2.0 + 1e-9)
        return {ChaosStatus::NotChaotic, ChaosMethod::TraceNecessary, abstr, false};
    // Inside the trace disk the verdict reduces to the qubit eigenphase gap.
    return {ChaosStatus::NotChaotic, ChaosMethod::ExactD2, s.theta, false};
}

std::string to_string(PaperClaim c) {
    switch (c) {
        case PaperClaim::Chaotic: return "Chaotic";
        case PaperClaim::NotChaotic: return "NotChaotic";
        default: return "None";
    }
}

}  // namespace qde
