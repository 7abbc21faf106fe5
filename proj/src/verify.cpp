#include "nrb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "nrb/bounds.hpp"
#include "nrb/spectra.hpp"

namespace nrb {

std::pair<double, double> SplitMix64::next_gaussian_pair() {
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
}

Complex SplitMix64::next_complex_gaussian() {
    const auto [re, im] = next_gaussian_pair();
    return Complex(re, im);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char byte : s) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t derive_stream_seed(std::uint64_t trial_seed, std::string_view check_name) {
    SplitMix64 g(trial_seed ^ fnv1a64(check_name));
    return g.next();
}

GenKind gen_kind_from_name(std::string_view name) {
    if (name == "complex-gaussian") return GenKind::ComplexGaussian;
    if (name == "nonnegative") return GenKind::Nonnegative;
    if (name == "self-adjoint") return GenKind::SelfAdjoint;
    if (name == "unitary") return GenKind::Unitary;
    if (name == "unit-vector") return GenKind::UnitVector;
    throw std::invalid_argument("unknown generator kind: " + std::string(name));
}

std::string_view gen_kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::ComplexGaussian: return "complex-gaussian";
        case GenKind::Nonnegative: return "nonnegative";
        case GenKind::SelfAdjoint: return "self-adjoint";
        case GenKind::Unitary: return "unitary";
        case GenKind::UnitVector: return "unit-vector";
    }
    throw std::invalid_argument("unknown generator kind");
}

namespace {

ComplexMatrix gauss_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.next_complex_gaussian();
    return m;
}

ComplexMatrix nonneg_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = std::abs(rng.next_gaussian());
    return m;
}

ComplexMatrix selfadjoint_matrix(SplitMix64& rng, std::size_t n) {
    return real_part(gauss_matrix(rng, n, n));
}

ComplexMatrix unitary_matrix(SplitMix64& rng, std::size_t n) {
    ComplexMatrix q = gauss_matrix(rng, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                Complex c = 0.0;
                for (std::size_t i = 0; i < n; ++i) c += q(i, k) * std::conj(q(i, j));
                for (std::size_t i = 0; i < n; ++i) q(i, k) -= c * q(i, j);
            }
        }
        double nn = 0.0;
        for (std::size_t i = 0; i < n; ++i) nn += std::norm(q(i, k));
        nn = std::sqrt(nn);
        if (nn == 0.0) {
            q(k, k) = 1.0;
            nn = 1.0;
        }
        for (std::size_t i = 0; i < n; ++i) q(i, k) /= nn;
    }
    return q;
}

ComplexVector gauss_vector(SplitMix64& rng, std::size_t dim) {
    ComplexVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rng.next_complex_gaussian();
    return v;
}

ComplexVector unit_vector(SplitMix64& rng, std::size_t dim) {
    ComplexVector v = gauss_vector(rng, dim);
    double nn = norm(v);
    if (nn == 0.0) {
        v[0] = 1.0;
        nn = 1.0;
    }
    for (std::size_t i = 0; i < dim; ++i) v[i] /= nn;
    return v;
}

std::size_t pick_dim(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.next() % (hi - lo + 1));
}

/// Relative-equality gap: positive when |u - v| <= 1e-10 * scale.
double rel_gap(double u, double v) {
    const double tol = 1e-10 * std::max({1.0, std::abs(u), std::abs(v)});
    return tol - std::abs(u - v);
}

CheckResult make_result(std::string name, double gap, std::uint64_t seed) {
    return CheckResult{std::move(name), gap, seed, gap >= -kCheckSlack};
}

// --- per-check gap functions -------------------------------------------------

double gap_cauchy_schwarz(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    return check_cauchy_schwarz(gauss_vector(rng, d), gauss_vector(rng, d)).gap;
}

double gap_buzano(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    return check_buzano(gauss_vector(rng, d), gauss_vector(rng, d), gauss_vector(rng, d)).gap;
}

double gap_mixed_cs(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d1 = pick_dim(rng, lo, hi);
    const std::size_t d2 = pick_dim(rng, lo, hi);
    const ComplexMatrix t = gauss_matrix(rng, d2, d1);
    const ComplexVector x = gauss_vector(rng, d1);
    const ComplexVector y = gauss_vector(rng, d2);
    double gap = std::numeric_limits<double>::infinity();
    for (double power : {0.0, 0.25, 0.5, 0.75, 1.0})
        gap = std::min(gap, check_mixed_cs(t, x, y, power).gap);
    return gap;
}

double gap_homogeneity(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    const ComplexMatrix a = gauss_matrix(rng, d, d);
    const Complex c = rng.next_complex_gaussian();
    const ComplexMatrix b = c * a;
    const double ac = std::abs(c);
    double gap = rel_gap(numerical_radius(b), ac * numerical_radius(a));
    gap = std::min(gap, rel_gap(operator_norm(b), ac * operator_norm(a)));
    gap = std::min(gap, rel_gap(spectral_radius(b), ac * spectral_radius(a)));
    return gap;
}

double gap_adjoint_symmetry(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    const ComplexMatrix a = gauss_matrix(rng, d, d);
    const ComplexMatrix aj = adjoint(a);
    return std::min(rel_gap(numerical_radius(aj), numerical_radius(a)),
                    rel_gap(operator_norm(aj), operator_norm(a)));
}

double gap_hermitian_collapse(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    const ComplexMatrix h = selfadjoint_matrix(rng, d);
    const double w = numerical_radius(h);
    const double nm = operator_norm(h);
    const std::vector<double> ev = hermitian_eigenvalues(h);
    const double me = std::max(std::abs(ev.front()), std::abs(ev.back()));
    return std::min({rel_gap(w, nm), rel_gap(w, me), rel_gap(nm, me)});
}

double gap_sandwich(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    const SpectralSummary s = spectral_summary(gauss_matrix(rng, d, d));
    return std::min({s.numerical_radius - 0.5 * s.operator_norm,
                     s.operator_norm - s.numerical_radius,
                     s.numerical_radius - s.spectral_radius});
}

double gap_power_inequality(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    const ComplexMatrix a = gauss_matrix(rng, d, d);
    const double w = numerical_radius(a);
    return w * w - numerical_radius(matmul(a, a));
}

double gap_lower_bound(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    const ComplexMatrix a = gauss_matrix(rng, d, d);
    const double w = numerical_radius(a);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const ComplexVector x = unit_vector(rng, d);
        worst = std::max(worst, std::abs(inner_product(matvec(a, x), x)));
    }
    return w - worst;
}

double gap_goldberg(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    const ComplexMatrix t = nonneg_matrix(rng, d, d);
    return -std::abs(numerical_radius(t) - operator_norm(real_part(t)));
}

double gap_lemma_soundness(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d1 = pick_dim(rng, lo, hi);
    const std::size_t d2 = pick_dim(rng, lo, hi);
    const ComplexMatrix a = gauss_matrix(rng, d2, d1);
    const ComplexMatrix b = gauss_matrix(rng, d1, d2);
    const ComplexVector x = gauss_vector(rng, d1);
    const ComplexVector y = gauss_vector(rng, d2);
    const PairBoundReport rep = pair_bounds(a, b);
    const double lhs = inner_sum(a, b, x, y);
    return std::min(rep.lemma21, rep.lemma22) * norm(x) * norm(y) - lhs;
}

double gap_remark21_chain(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d1 = pick_dim(rng, lo, hi);
    const std::size_t d2 = pick_dim(rng, lo, hi);
    const PairBoundReport rep =
        pair_bounds(gauss_matrix(rng, d2, d1), gauss_matrix(rng, d1, d2));
    return rep.reference - rep.lemma21;
}

double gap_incomparability(SplitMix64&, std::size_t, std::size_t) {
    const ComplexMatrix a1 = ComplexMatrix::from_rows({{4.0, 1.0}, {3.0, 3.0}});
    const ComplexMatrix b1 = ComplexMatrix::from_rows({{4.0, 1.0}, {-3.0, -1.0}});
    const ComplexMatrix a2 = ComplexMatrix::from_rows({{2.0, 2.0}, {-1.0, 2.0}});
    const ComplexMatrix b2 = ComplexMatrix::from_rows({{3.0, 4.0}, {4.0, 1.0}});
    const PairBoundReport r1 = pair_bounds(a1, b1);
    const PairBoundReport r2 = pair_bounds(a2, b2);
    const double margin1 = r1.lemma21 - r1.lemma22;  // second bound wins here
    const double margin2 = r2.lemma22 - r2.lemma21;  // first bound wins here
    return std::min(margin1, margin2) - 0.1;
}

BlockMatrix sample_block2(SplitMix64& rng, std::size_t d1, std::size_t d2) {
    return make_block_matrix({d1, d2}, {gauss_matrix(rng, d1, d1), gauss_matrix(rng, d1, d2),
                                        gauss_matrix(rng, d2, d1), gauss_matrix(rng, d2, d2)});
}

double gap_theorem_soundness(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d1 = pick_dim(rng, lo, hi);
    const std::size_t d2 = pick_dim(rng, lo, hi);
    const BlockMatrix bm = sample_block2(rng, d1, d2);
    const BlockBoundReport rep = block_bounds(bm);
    const double w = numerical_radius(assemble(bm));
    return std::min(rep.omega_alpha - w, rep.omega_beta - w);
}

double gap_refinement_chain(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d1 = pick_dim(rng, lo, hi);
    const std::size_t d2 = pick_dim(rng, lo, hi);
    const BlockBoundReport rep = block_bounds(sample_block2(rng, d1, d2));
    return std::min(rep.omega_abu_omar - rep.omega_alpha, rep.omega_hou - rep.omega_abu_omar);
}

double gap_offdiag_refinement(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d1 = pick_dim(rng, lo, hi);
    const std::size_t d2 = pick_dim(rng, lo, hi);
    const ComplexMatrix b = gauss_matrix(rng, d1, d2);
    const ComplexMatrix c = gauss_matrix(rng, d2, d1);
    const BlockMatrix bm =
        make_block_matrix({d1, d2}, {ComplexMatrix(d1, d1), b, c, ComplexMatrix(d2, d2)});
    const BlockBoundReport rep = block_bounds(bm);
    return 0.5 * (operator_norm(b) + operator_norm(c)) - rep.omega_alpha;
}

double gap_self_chain(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    const ComplexMatrix t = gauss_matrix(rng, d, d);
    const SelfBoundReport rep = self_bounds(t);
    const double w = numerical_radius(t);
    return std::min({rep.c8 - w, rep.c7 - rep.c8, rep.norm - rep.c7});
}

double gap_corollary_soundness(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d1 = pick_dim(rng, lo, hi);
    const std::size_t d2 = pick_dim(rng, lo, hi);
    const ComplexMatrix a = gauss_matrix(rng, d1, d1);
    const ComplexMatrix b = gauss_matrix(rng, d1, d2);
    const ComplexMatrix c = gauss_matrix(rng, d2, d1);
    const ComplexMatrix d = gauss_matrix(rng, d2, d2);
    const TwoByTwoBoundReport rep = two_by_two_bounds(a, b, c, d);
    const double wt = numerical_radius(assemble(make_block_matrix({d1, d2}, {a, b, c, d})));
    const BlockMatrix row = make_block_matrix(
        {d1, d2}, {a, b, ComplexMatrix(d2, d1), ComplexMatrix(d2, d2)});
    const double wr = numerical_radius(assemble(row));
    const RowBoundReport rb = row_bounds(a, b);
    double gap = std::min({rep.cor1 - wt, rep.cor2 - wt, rb.sh1 - wr, rb.sh2 - wr});
    if (rep.hirzallah) gap = std::min(gap, *rep.hirzallah - wt);
    return gap;
}

double gap_spectral_soundness(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d1 = pick_dim(rng, lo, hi);
    const std::size_t e1 = pick_dim(rng, lo, hi);
    const std::size_t e2 = pick_dim(rng, lo, hi);
    const std::vector<ComplexMatrix> as = {gauss_matrix(rng, d1, e1), gauss_matrix(rng, d1, e2)};
    const std::vector<ComplexMatrix> bs = {gauss_matrix(rng, e1, d1), gauss_matrix(rng, e2, d1)};
    const SpectralSumBoundReport rep = spectral_sum_bounds(as, bs);
    return std::min(rep.omega_gamma - rep.r_direct, rep.omega_lambda - rep.r_direct);
}

double gap_oracle_agreement(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d =
        std::min<std::size_t>(pick_dim(rng, lo, hi), static_cast<std::size_t>(kOracleMaxSide));
    const ComplexMatrix a = gauss_matrix(rng, d, d);
    const double r1 = spectral_radius(a);
    const double r2 = oracle_spectral_radius(a);
    return 1e-6 * std::max(r1, r2) - std::abs(r1 - r2);
}

double gap_rab_rba(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    const std::size_t d = pick_dim(rng, lo, hi);
    const ComplexMatrix a = gauss_matrix(rng, d, d);
    const ComplexMatrix b = gauss_matrix(rng, d, d);
    return -std::abs(spectral_radius(matmul(a, b)) - spectral_radius(matmul(b, a)));
}

struct CheckDef {
    const char* name;
    double (*gap)(SplitMix64&, std::size_t, std::size_t);
};

constexpr CheckDef kCheckTable[] = {
    {"cauchy-schwarz", gap_cauchy_schwarz},
    {"buzano", gap_buzano},
    {"mixed-cs", gap_mixed_cs},
    {"homogeneity", gap_homogeneity},
    {"adjoint-symmetry", gap_adjoint_symmetry},
    {"hermitian-collapse", gap_hermitian_collapse},
    {"sandwich", gap_sandwich},
    {"power-inequality", gap_power_inequality},
    {"lower-bound", gap_lower_bound},
    {"goldberg", gap_goldberg},
    {"lemma-soundness", gap_lemma_soundness},
    {"remark21-chain", gap_remark21_chain},
    {"incomparability", gap_incomparability},
    {"theorem-soundness", gap_theorem_soundness},
    {"refinement-chain", gap_refinement_chain},
    {"offdiag-refinement", gap_offdiag_refinement},
    {"self-chain", gap_self_chain},
    {"corollary-soundness", gap_corollary_soundness},
    {"spectral-soundness", gap_spectral_soundness},
    {"oracle-agreement", gap_oracle_agreement},
    {"rab-rba", gap_rab_rba},
};

Complex trace_of(const ComplexMatrix& a) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Complex horner(const std::vector<Complex>& coeff, Complex z) {
    Complex val = coeff[0];
    for (std::size_t k = 1; k < coeff.size(); ++k) val = val * z + coeff[k];
    return val;
}

}  // namespace

std::variant<ComplexMatrix, ComplexVector> sample(const GenSpec& spec) {
    if (spec.rows == 0) throw std::invalid_argument("sample: dimension must be positive");
    std::size_t cols = spec.cols == 0 ? spec.rows : spec.cols;
    SplitMix64 rng(spec.seed);
    switch (spec.kind) {
        case GenKind::ComplexGaussian:
            return gauss_matrix(rng, spec.rows, cols);
        case GenKind::Nonnegative:
            return nonneg_matrix(rng, spec.rows, cols);
        case GenKind::SelfAdjoint:
            if (cols != spec.rows)
                throw std::invalid_argument("sample: self-adjoint output must be square");
            return selfadjoint_matrix(rng, spec.rows);
        case GenKind::Unitary:
            if (cols != spec.rows)
                throw std::invalid_argument("sample: unitary output must be square");
            return unitary_matrix(rng, spec.rows);
        case GenKind::UnitVector:
            return unit_vector(rng, spec.rows);
    }
    throw std::invalid_argument("sample: unknown generator kind");
}

CheckResult check_cauchy_schwarz(const ComplexVector& x, const ComplexVector& y,
                                 std::uint64_t seed) {
    const double gap = norm(x) * norm(y) - std::abs(inner_product(x, y));
    return make_result("cauchy-schwarz", gap, seed);
}

CheckResult check_buzano(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                         std::uint64_t seed) {
    const double nz = norm(z);
    const double rhs =
        0.5 * nz * nz * (std::abs(inner_product(x, y)) + norm(x) * norm(y));
    const double lhs = std::abs(inner_product(x, z)) * std::abs(inner_product(y, z));
    return make_result("buzano", rhs - lhs, seed);
}

CheckResult check_mixed_cs(const ComplexMatrix& t, const ComplexVector& x,
                           const ComplexVector& y, double power, std::uint64_t seed) {
    if (!(power >= 0.0 && power <= 1.0))
        throw std::invalid_argument("check_mixed_cs: power must lie in [0, 1]");
    const ComplexMatrix taj = adjoint(t);
    const ComplexMatrix p1 = psd_power(matmul(taj, t), 1.0 - power);
    const ComplexMatrix p2 = psd_power(matmul(t, taj), power);
    const double q1 = inner_product(matvec(p1, x), x).real();
    const double q2 = inner_product(matvec(p2, y), y).real();
    const double lhs = std::norm(inner_product(matvec(t, x), y));
    return make_result("mixed-cs", q1 * q2 - lhs, seed);
}

double oracle_spectral_radius(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("oracle_spectral_radius: matrix must be square");
    const std::size_t n = a.rows();
    if (n == 0) throw std::invalid_argument("oracle_spectral_radius: matrix must be nonempty");
    if (n > static_cast<std::size_t>(kOracleMaxSide))
        throw std::invalid_argument("oracle_spectral_radius: side exceeds the oracle limit of 8");
    require_finite(a, "oracle_spectral_radius");

    // Characteristic coefficients by the Faddeev-LeVerrier recurrence.
    std::vector<Complex> coeff(n + 1);
    coeff[0] = 1.0;
    ComplexMatrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            for (std::size_t i = 0; i < n; ++i) m(i, i) += coeff[k - 1];
            m = matmul(a, m);
        }
        coeff[k] = -trace_of(m) / double(k);
    }

    double max_coeff = 0.0;
    for (std::size_t k = 1; k <= n; ++k) max_coeff = std::max(max_coeff, std::abs(coeff[k]));
    const double radius = 1.0 + max_coeff;
    const double residual_scale = std::max(1.0, max_coeff);

    std::vector<Complex> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double angle = 2.0 * std::numbers::pi * double(j) / double(n) + kOracleAngleOffset;
        z[j] = radius * Complex(std::cos(angle), std::sin(angle));
    }

    bool converged = false;
    for (int iter = 0; iter < kOracleMaxIter && !converged; ++iter) {
        double max_step = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            Complex den = 1.0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) den *= z[j] - z[k];
            if (den == Complex(0.0)) continue;
            const Complex dz = horner(coeff, z[j]) / den;
            z[j] -= dz;
            max_step = std::max(max_step, std::abs(dz));
        }
        double max_res = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            max_res = std::max(max_res, std::abs(horner(coeff, z[j])));
        converged = max_res <= kOracleResidualTol * residual_scale || max_step <= 1e-13 * radius;
    }
    if (!converged)
        throw std::runtime_error("oracle_spectral_radius: root iteration did not converge");

    double r = 0.0;
    for (const Complex& root : z) r = std::max(r, std::abs(root));
    return r;
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const CheckDef& def : kCheckTable) v.emplace_back(def.name);
        return v;
    }();
    return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
    if (config.dim_lo < 1)
        throw std::invalid_argument("run_suite: dimensions must be at least 1");
    if (config.dim_lo > config.dim_hi)
        throw std::invalid_argument("run_suite: dimension range is empty");
    if (config.checks.empty())
        throw std::invalid_argument("run_suite: checks list must not be empty");

    std::vector<const CheckDef*> defs;
    defs.reserve(config.checks.size());
    for (const std::string& name : config.checks) {
        const CheckDef* found = nullptr;
        for (const CheckDef& def : kCheckTable)
            if (name == def.name) {
                found = &def;
                break;
            }
        if (!found) throw std::invalid_argument("run_suite: unknown check identifier: " + name);
        defs.push_back(found);
    }

    const std::size_t ncheck = defs.size();
    const std::uint64_t trials = config.trials;
    std::vector<CheckResult> results(static_cast<std::size_t>(trials) * ncheck);

    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&](std::uint64_t t0, std::uint64_t t1) {
        try {
            for (std::uint64_t t = t0; t < t1; ++t) {
                const std::uint64_t trial_seed = config.seed + t;
                for (std::size_t i = 0; i < ncheck; ++i) {
                    const std::uint64_t stream = derive_stream_seed(trial_seed, defs[i]->name);
                    SplitMix64 rng(stream);
                    const double gap = defs[i]->gap(rng, config.dim_lo, config.dim_hi);
                    results[static_cast<std::size_t>(t) * ncheck + i] =
                        make_result(defs[i]->name, gap, stream);
                }
            }
        } catch (...) {
            const std::lock_guard<std::mutex> hold(error_mutex);
            if (!error) error = std::current_exception();
        }
    };

    const unsigned threads =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, config.threads), std::max<std::uint64_t>(trials, 1)));
    if (threads <= 1) {
        worker(0, trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const std::uint64_t chunk = (trials + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t t0 = std::min<std::uint64_t>(trials, w * chunk);
            const std::uint64_t t1 = std::min<std::uint64_t>(trials, t0 + chunk);
            if (t0 < t1) pool.emplace_back(worker, t0, t1);
        }
        for (std::thread& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    SuiteReport report;
    report.trials = trials;
    for (const CheckResult& r : results) {
        CheckStats& st = report.stats[r.name];
        if (st.count == 0 || r.gap < st.min_gap) st.min_gap = r.gap;
        st.mean_gap += r.gap;
        ++st.count;
        if (!r.passed) report.failures.push_back(r);
    }
    for (auto& [name, st] : report.stats)
        if (st.count > 0) st.mean_gap /= double(st.count);
    return report;
}

}  // namespace nrb
