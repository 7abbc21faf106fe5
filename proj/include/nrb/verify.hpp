#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nrb/matrix.hpp"

namespace nrb {

/// Single absolute slack for every inequality check on desk-scale inputs.
inline constexpr double kCheckSlack = 1e-8;

/// Characteristic-polynomial oracle controls: Durand-Kerner points start on a
/// circle of radius 1 + max|coefficient| with angles offset to break symmetry.
inline constexpr int kOracleMaxSide = 8;
inline constexpr int kOracleMaxIter = 500;
inline constexpr double kOracleAngleOffset = 0.4;
inline constexpr double kOracleResidualTol = 1e-12;

/// SplitMix64: the fixed cross-platform generator behind every sampler.
/// next() advances the state by the 64-bit golden ratio and scrambles it with
/// the standard two multiply-xorshift rounds; next_double() keeps the top 53
/// bits; gaussians come from Box-Muller on (1 - u1, u2). Real draws take the
/// cosine element of the pair and discard the other.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

    std::pair<double, double> next_gaussian_pair();
    double next_gaussian() { return next_gaussian_pair().first; }
    Complex next_complex_gaussian();

private:
    std::uint64_t state_;
};

/// FNV-1a on the check name, folded into the trial seed and scrambled once;
/// this gives every (trial, check) pair its own independent stream, so
/// disabling checks never shifts the inputs of the remaining ones.
std::uint64_t fnv1a64(std::string_view s);
std::uint64_t derive_stream_seed(std::uint64_t trial_seed, std::string_view check_name);

enum class GenKind { ComplexGaussian, Nonnegative, SelfAdjoint, Unitary, UnitVector };

/// Parsed from the kebab-case names used in reports; throws on unknown names.
GenKind gen_kind_from_name(std::string_view name);
std::string_view gen_kind_name(GenKind kind);

struct GenSpec {
    GenKind kind = GenKind::ComplexGaussian;
    std::size_t rows = 0;  // the dimension for square/vector kinds
    std::size_t cols = 0;  // ignored for square/vector kinds
    std::uint64_t seed = 0;
};

/// Deterministic sampler: identical GenSpec, identical output bits.
std::variant<ComplexMatrix, ComplexVector> sample(const GenSpec& spec);

struct CheckResult {
    std::string name;
    double gap = 0.0;  // bound minus left side; nonnegative means pass
    std::uint64_t seed = 0;
    bool passed = false;  // gap >= -kCheckSlack
};

CheckResult check_cauchy_schwarz(const ComplexVector& x, const ComplexVector& y,
                                 std::uint64_t seed = 0);
CheckResult check_buzano(const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                         std::uint64_t seed = 0);
CheckResult check_mixed_cs(const ComplexMatrix& t, const ComplexVector& x,
                           const ComplexVector& y, double power, std::uint64_t seed = 0);

/// Independent spectral-radius oracle: Faddeev-LeVerrier characteristic
/// coefficients, then Durand-Kerner roots; the largest root modulus. Sides
/// above kOracleMaxSide are rejected (conditioning).
double oracle_spectral_radius(const ComplexMatrix& a);

struct SuiteConfig {
    std::uint64_t trials = 0;
    std::size_t dim_lo = 2;
    std::size_t dim_hi = 5;
    std::uint64_t seed = 0;
    std::vector<std::string> checks;  // must be nonempty; see all_check_names()
    unsigned threads = 1;
};

struct CheckStats {
    double min_gap = 0.0;
    double mean_gap = 0.0;
    std::uint64_t count = 0;
};

struct SuiteReport {
    std::uint64_t trials = 0;
    std::vector<CheckResult> failures;
    std::map<std::string, CheckStats> stats;
};

/// Runs every named check on each trial, with per-trial seeds config.seed +
/// trial index, reporting failures and per-check gap statistics. The result is
/// independent of the thread count.
SuiteReport run_suite(const SuiteConfig& config);

/// The full catalog of check identifiers, in canonical order.
const std::vector<std::string>& all_check_names();

}  // namespace nrb
