#include "qde/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace qde::io {

double round12(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite number in output");
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

json number(double x) { return json(round12(x)); }

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.dim(); ++c)
            row.push_back({number(m(r, c).real()), number(m(r, c).imag())});
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim()}, {"rows", std::move(rows)}};
}

namespace {

Complex parse_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("complex entries must be [re, im] pairs");
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("non-finite matrix entry");
    return z;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("rows"))
        throw std::invalid_argument("matrix JSON needs \"dim\" and \"rows\"");
    const int d = j.at("dim").get<int>();
    if (d < 1 || d > 16) throw std::invalid_argument("matrix dim must be in [1, 16]");
    const json& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
        throw std::invalid_argument("matrix JSON row count differs from dim");
    ComplexMatrix m(d);
    for (int r = 0; r < d; ++r) {
        const json& row = rows[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw std::invalid_argument("matrix JSON row length differs from dim");
        for (int c = 0; c < d; ++c) m(r, c) = parse_complex(row[static_cast<size_t>(c)]);
    }
    return m;
}

ComplexMatrix load_matrix(const std::string& path) { return matrix_from_json(load_json(path)); }

json povm_to_json(const RankOnePOVM& povm) {
    json vectors = json::array();
    for (const auto& v : povm.vectors()) {
        json vec = json::array();
        for (const Complex& z : v) vec.push_back({number(z.real()), number(z.imag())});
        vectors.push_back(std::move(vec));
    }
    return json{{"dim", povm.dim()}, {"vectors", std::move(vectors)}};
}

RankOnePOVM povm_from_json(const json& j) {
    if (j.contains("rows")) return RankOnePOVM::from_unitary(matrix_from_json(j));
    if (!j.contains("dim") || !j.contains("vectors"))
        throw std::invalid_argument("POVM JSON needs \"dim\" and \"vectors\" (or a matrix file)");
    const int d = j.at("dim").get<int>();
    if (d < 1 || d > 16) throw std::invalid_argument("POVM dim must be in [1, 16]");
    std::vector<std::vector<Complex>> vectors;
    for (const json& vec : j.at("vectors")) {
        if (!vec.is_array() || static_cast<int>(vec.size()) != d)
            throw std::invalid_argument("POVM vector length differs from dim");
        std::vector<Complex> v;
        v.reserve(static_cast<size_t>(d));
        for (const json& z : vec) v.push_back(parse_complex(z));
        vectors.push_back(std::move(v));
    }
    return RankOnePOVM::validate(std::move(vectors), d);
}

RankOnePOVM load_povm(const std::string& path) { return povm_from_json(load_json(path)); }

json estimate_to_json(const McEstimate& e) {
    return json{{"mean", number(e.mean)},
                {"std_error", number(e.std_error)},
                {"samples", e.samples},
                {"seed", e.seed},
                {"worker_count", e.worker_count}};
}

json verdict_to_json(const ChaosVerdict& v) {
    return json{{"status", to_string(v.status)},
                {"method", to_string(v.method)},
                {"detail", number(v.detail)}};
}

}  // namespace qde::io
