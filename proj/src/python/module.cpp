#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nrb/bounds.hpp"
#include "nrb/matrix.hpp"
#include "nrb/repro.hpp"
#include "nrb/spectra.hpp"
#include "nrb/verify.hpp"

namespace py = pybind11;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

nrb::ComplexMatrix matrix_from_array(const CArray& arr) {
    const py::buffer_info info = arr.request();
    if (info.ndim != 2) throw std::invalid_argument("expected a 2-d array");
    nrb::ComplexMatrix m(static_cast<std::size_t>(info.shape[0]),
                         static_cast<std::size_t>(info.shape[1]));
    std::memcpy(m.data(), info.ptr, sizeof(nrb::Complex) * m.rows() * m.cols());
    nrb::require_finite(m, "matrix argument");
    return m;
}

nrb::ComplexVector vector_from_array(const CArray& arr) {
    const py::buffer_info info = arr.request();
    if (info.ndim != 1) throw std::invalid_argument("expected a 1-d array");
    nrb::ComplexVector v(static_cast<std::size_t>(info.shape[0]));
    std::memcpy(v.data(), info.ptr, sizeof(nrb::Complex) * v.dim());
    nrb::require_finite(v, "vector argument");
    return v;
}

py::array matrix_to_array(const nrb::ComplexMatrix& m) {
    py::array_t<std::complex<double>> out({m.rows(), m.cols()});
    std::memcpy(out.mutable_data(), m.data(), sizeof(nrb::Complex) * m.rows() * m.cols());
    return out;
}

py::array vector_to_array(const nrb::ComplexVector& v) {
    py::array_t<std::complex<double>> out(v.dim());
    std::memcpy(out.mutable_data(), v.data(), sizeof(nrb::Complex) * v.dim());
    return out;
}

std::vector<nrb::ComplexMatrix> matrices_from_list(const std::vector<CArray>& arrays) {
    std::vector<nrb::ComplexMatrix> out;
    out.reserve(arrays.size());
    for (const CArray& a : arrays) out.push_back(matrix_from_array(a));
    return out;
}

py::dict summary_dict(const nrb::SpectralSummary& s) {
    py::dict d;
    d["numerical_radius"] = s.numerical_radius;
    d["operator_norm"] = s.operator_norm;
    d["spectral_radius"] = s.spectral_radius;
    return d;
}

py::dict pair_dict(const nrb::PairBoundReport& r) {
    py::dict d;
    d["lemma21"] = r.lemma21;
    d["lemma22"] = r.lemma22;
    d["reference"] = r.reference;
    return d;
}

py::dict suite_dict(const nrb::SuiteReport& rep) {
    py::list failures;
    for (const nrb::CheckResult& f : rep.failures) {
        py::dict fd;
        fd["name"] = f.name;
        fd["gap"] = f.gap;
        fd["seed"] = f.seed;
        fd["passed"] = f.passed;
        failures.append(fd);
    }
    py::dict stats;
    for (const auto& [name, st] : rep.stats) {
        py::dict sd;
        sd["min_gap"] = st.min_gap;
        sd["mean_gap"] = st.mean_gap;
        sd["count"] = st.count;
        stats[name.c_str()] = sd;
    }
    py::dict d;
    d["trials"] = rep.trials;
    d["failures"] = failures;
    d["stats"] = stats;
    return d;
}

py::list repro_list(const std::vector<nrb::ReproCaseResult>& cases) {
    py::list out;
    for (const nrb::ReproCaseResult& c : cases) {
        py::list checks;
        for (const nrb::ReproCheck& k : c.checks) {
            py::dict kd;
            kd["quantity"] = k.quantity;
            kd["computed"] = k.computed;
            kd["expected"] = k.expected;
            kd["relation"] = k.relation == nrb::ReproRelation::Approx ? "~" : ">";
            kd["tolerance"] = k.tolerance;
            kd["passed"] = k.passed;
            checks.append(kd);
        }
        py::dict cd;
        cd["id"] = c.id;
        cd["citation"] = c.citation;
        cd["checks"] = checks;
        cd["passed"] = c.passed;
        out.append(cd);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "numerical radius, operator norm, and spectral radius toolkit";

    m.def(
        "numerical_radius",
        [](const CArray& a) { return nrb::numerical_radius(matrix_from_array(a)); },
        py::arg("a"), "Numerical radius of a square complex matrix.");
    m.def(
        "operator_norm",
        [](const CArray& a) { return nrb::operator_norm(matrix_from_array(a)); },
        py::arg("a"), "Largest singular value.");
    m.def(
        "spectral_radius",
        [](const CArray& a) { return nrb::spectral_radius(matrix_from_array(a)); },
        py::arg("a"), "Largest eigenvalue modulus (Gelfand iteration).");
    m.def(
        "spectral_summary",
        [](const CArray& a) { return summary_dict(nrb::spectral_summary(matrix_from_array(a))); },
        py::arg("a"), "All three radii as a dict.");
    m.def(
        "oracle_spectral_radius",
        [](const CArray& a) { return nrb::oracle_spectral_radius(matrix_from_array(a)); },
        py::arg("a"),
        "Independent spectral radius via characteristic-polynomial roots (side <= 8).");

    m.def(
        "hermitian_eigenvalues",
        [](const CArray& a) {
            const std::vector<double> ev = nrb::hermitian_eigenvalues(matrix_from_array(a));
            return py::array_t<double>(ev.size(), ev.data());
        },
        py::arg("h"), "Ascending eigenvalues of a Hermitian matrix.");
    m.def(
        "abs_value",
        [](const CArray& a) { return matrix_to_array(nrb::abs_value(matrix_from_array(a))); },
        py::arg("a"), "Operator absolute value (A* A)^(1/2).");
    m.def(
        "psd_power",
        [](const CArray& p, double s) {
            return matrix_to_array(nrb::psd_power(matrix_from_array(p), s));
        },
        py::arg("p"), py::arg("s"), "Fractional power of a PSD matrix.");

    m.def(
        "pair_bounds",
        [](const CArray& a, const CArray& b) {
            return pair_dict(nrb::pair_bounds(matrix_from_array(a), matrix_from_array(b)));
        },
        py::arg("a"), py::arg("b"),
        "Both inner-product-sum bounds plus the reference bound for a pair A, B.");
    m.def(
        "inner_sum",
        [](const CArray& a, const CArray& b, const CArray& x, const CArray& y) {
            return nrb::inner_sum(matrix_from_array(a), matrix_from_array(b),
                                  vector_from_array(x), vector_from_array(y));
        },
        py::arg("a"), py::arg("b"), py::arg("x"), py::arg("y"),
        "|<Ax, y>| + |<By, x>|.");

    m.def(
        "block_bounds",
        [](const CArray& t, const std::vector<std::size_t>& dims) {
            const nrb::BlockBoundReport r =
                nrb::block_bounds(nrb::split(matrix_from_array(t), dims));
            py::dict d;
            d["alpha"] = matrix_to_array(r.alpha);
            d["beta"] = matrix_to_array(r.beta);
            d["abu_omar"] = matrix_to_array(r.abu_omar);
            d["hou"] = matrix_to_array(r.hou);
            d["omega_alpha"] = r.omega_alpha;
            d["omega_beta"] = r.omega_beta;
            d["omega_abu_omar"] = r.omega_abu_omar;
            d["omega_hou"] = r.omega_hou;
            return d;
        },
        py::arg("t"), py::arg("dims"),
        "Comparison-matrix bounds for a square matrix split into blocks of the given sizes.");

    m.def(
        "two_by_two_bounds",
        [](const CArray& a, const CArray& b, const CArray& c, const CArray& d) {
            const nrb::TwoByTwoBoundReport r =
                nrb::two_by_two_bounds(matrix_from_array(a), matrix_from_array(b),
                                       matrix_from_array(c), matrix_from_array(d));
            py::dict out;
            out["cor1"] = r.cor1;
            out["cor2"] = r.cor2;
            out["hirzallah"] = r.hirzallah ? py::cast(*r.hirzallah) : py::none();
            out["shebrawi3"] = r.shebrawi3;
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        "Bounds for the operator matrix [[A, B], [C, D]].");

    m.def(
        "row_bounds",
        [](const CArray& a, const CArray& b) {
            const nrb::RowBoundReport r =
                nrb::row_bounds(matrix_from_array(a), matrix_from_array(b));
            py::dict d;
            d["sh1"] = r.sh1;
            d["sh2"] = r.sh2;
            return d;
        },
        py::arg("a"), py::arg("b"), "Bounds for the row operator [A B; 0 0].");

    m.def(
        "self_bounds",
        [](const CArray& t) {
            const nrb::SelfBoundReport r = nrb::self_bounds(matrix_from_array(t));
            py::dict d;
            d["c7"] = r.c7;
            d["c8"] = r.c8;
            d["kittaneh"] = r.kittaneh;
            d["norm"] = r.norm;
            return d;
        },
        py::arg("t"), "Single-operator numerical radius bounds.");

    m.def(
        "spectral_sum_bounds",
        [](const std::vector<CArray>& as, const std::vector<CArray>& bs) {
            const nrb::SpectralSumBoundReport r =
                nrb::spectral_sum_bounds(matrices_from_list(as), matrices_from_list(bs));
            py::dict d;
            d["gamma"] = matrix_to_array(r.gamma);
            d["lambda"] = matrix_to_array(r.lambda);
            d["omega_gamma"] = r.omega_gamma;
            d["omega_lambda"] = r.omega_lambda;
            d["r_direct"] = r.r_direct;
            return d;
        },
        py::arg("as_"), py::arg("bs"),
        "Bounds for the spectral radius of sum(A_i B_i).");

    m.def(
        "sample",
        [](const std::string& kind, std::size_t rows, std::size_t cols, std::uint64_t seed) {
            nrb::GenSpec spec;
            spec.kind = nrb::gen_kind_from_name(kind);
            spec.rows = rows;
            spec.cols = cols;
            spec.seed = seed;
            const auto value = nrb::sample(spec);
            if (std::holds_alternative<nrb::ComplexMatrix>(value))
                return py::object(matrix_to_array(std::get<nrb::ComplexMatrix>(value)));
            return py::object(vector_to_array(std::get<nrb::ComplexVector>(value)));
        },
        py::arg("kind"), py::arg("rows"), py::arg("cols") = 0, py::arg("seed") = 0,
        "Deterministic test-input sampler; kinds: complex-gaussian, nonnegative, "
        "self-adjoint, unitary, unit-vector.");

    m.def(
        "run_suite",
        [](std::uint64_t trials, std::size_t dim_lo, std::size_t dim_hi, std::uint64_t seed,
           const std::optional<std::vector<std::string>>& checks, unsigned threads) {
            nrb::SuiteConfig cfg;
            cfg.trials = trials;
            cfg.dim_lo = dim_lo;
            cfg.dim_hi = dim_hi;
            cfg.seed = seed;
            cfg.checks = checks ? *checks : nrb::all_check_names();
            cfg.threads = threads;
            return suite_dict(nrb::run_suite(cfg));
        },
        py::arg("trials"), py::arg("dim_lo") = 2, py::arg("dim_hi") = 5, py::arg("seed") = 0,
        py::arg("checks") = py::none(), py::arg("threads") = 1,
        "Seeded property-check suite over random inputs; see all_check_names().");

    m.def("all_check_names", [] { return nrb::all_check_names(); },
          "Canonical catalog of property-check identifiers.");

    m.def("run_repro", [] { return repro_list(nrb::run_repro()); },
          "Re-evaluates every embedded reference example and reports each comparison.");

    m.attr("CHECK_SLACK") = nrb::kCheckSlack;
    m.attr("REPRO_TOLERANCE") = nrb::kReproTolerance;
}
