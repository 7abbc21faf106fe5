#include "nrb/cli.hpp"

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nrb/bounds.hpp"
#include "nrb/io.hpp"
#include "nrb/matrix.hpp"
#include "nrb/repro.hpp"
#include "nrb/spectra.hpp"
#include "nrb/verify.hpp"

namespace nrb {

namespace {

using nlohmann::json;

json summary_json(const SpectralSummary& s) {
    return json{{"numerical_radius", s.numerical_radius},
                {"operator_norm", s.operator_norm},
                {"spectral_radius", s.spectral_radius}};
}

void require_file_count(const std::string& kind, const std::vector<std::string>& files,
                        std::size_t want) {
    if (files.size() != want)
        throw std::invalid_argument("bounds " + kind + ": expected " + std::to_string(want) +
                                    " file(s), got " + std::to_string(files.size()));
}

json bounds_json(const std::string& kind, const std::vector<std::string>& files) {
    json j;
    j["kind"] = kind;
    if (kind == "pair") {
        require_file_count(kind, files, 2);
        const ComplexMatrix a = load_matrix(files[0]);
        const ComplexMatrix b = load_matrix(files[1]);
        const PairBoundReport rep = pair_bounds(a, b);
        j["lemma21"] = rep.lemma21;
        j["lemma22"] = rep.lemma22;
        j["reference"] = rep.reference;
    } else if (kind == "block") {
        require_file_count(kind, files, 1);
        const BlockMatrix t = load_block(files[0]);
        const BlockBoundReport rep = block_bounds(t);
        j["alpha"] = real_matrix_to_json(rep.alpha);
        j["beta"] = real_matrix_to_json(rep.beta);
        j["abu_omar"] = real_matrix_to_json(rep.abu_omar);
        j["hou"] = real_matrix_to_json(rep.hou);
        j["omega_alpha"] = rep.omega_alpha;
        j["omega_beta"] = rep.omega_beta;
        j["omega_abu_omar"] = rep.omega_abu_omar;
        j["omega_hou"] = rep.omega_hou;
        j["omega_assembled"] = numerical_radius(assemble(t));
    } else if (kind == "2x2") {
        require_file_count(kind, files, 4);
        const ComplexMatrix a = load_matrix(files[0]);
        const ComplexMatrix b = load_matrix(files[1]);
        const ComplexMatrix c = load_matrix(files[2]);
        const ComplexMatrix d = load_matrix(files[3]);
        const TwoByTwoBoundReport rep = two_by_two_bounds(a, b, c, d);
        j["cor1"] = rep.cor1;
        j["cor2"] = rep.cor2;
        j["hirzallah"] = rep.hirzallah ? json(*rep.hirzallah) : json(nullptr);
        j["shebrawi3"] = rep.shebrawi3;
        const BlockMatrix t =
            make_block_matrix({a.rows(), d.rows()}, {a, b, c, d});
        j["omega_assembled"] = numerical_radius(assemble(t));
    } else if (kind == "row") {
        require_file_count(kind, files, 2);
        const ComplexMatrix a = load_matrix(files[0]);
        const ComplexMatrix b = load_matrix(files[1]);
        const RowBoundReport rep = row_bounds(a, b);
        j["sh1"] = rep.sh1;
        j["sh2"] = rep.sh2;
        const BlockMatrix t = make_block_matrix(
            {a.rows(), b.cols()},
            {a, b, ComplexMatrix(b.cols(), a.cols()), ComplexMatrix(b.cols(), b.cols())});
        j["omega_assembled"] = numerical_radius(assemble(t));
    } else if (kind == "self") {
        require_file_count(kind, files, 1);
        const ComplexMatrix t = load_matrix(files[0]);
        const SelfBoundReport rep = self_bounds(t);
        j["c7"] = rep.c7;
        j["c8"] = rep.c8;
        j["kittaneh"] = rep.kittaneh;
        j["norm"] = rep.norm;
        j["omega"] = numerical_radius(t);
    } else if (kind == "spectral-sum") {
        if (files.size() < 2 || files.size() % 2 != 0)
            throw std::invalid_argument(
                "bounds spectral-sum: expected an even number of files (A_1..A_n B_1..B_n)");
        const std::size_t n = files.size() / 2;
        std::vector<ComplexMatrix> as, bs;
        for (std::size_t i = 0; i < n; ++i) as.push_back(load_matrix(files[i]));
        for (std::size_t i = 0; i < n; ++i) bs.push_back(load_matrix(files[n + i]));
        const SpectralSumBoundReport rep = spectral_sum_bounds(as, bs);
        j["gamma"] = real_matrix_to_json(rep.gamma);
        j["lambda"] = real_matrix_to_json(rep.lambda);
        j["omega_gamma"] = rep.omega_gamma;
        j["omega_lambda"] = rep.omega_lambda;
        j["r_direct"] = rep.r_direct;
    } else {
        throw std::invalid_argument("bounds: unknown kind: " + kind);
    }
    return j;
}

json suite_report_json(const SuiteReport& report) {
    json failures = json::array();
    for (const CheckResult& f : report.failures)
        failures.push_back(json{
            {"name", f.name}, {"gap", f.gap}, {"seed", f.seed}, {"passed", f.passed}});
    json stats = json::object();
    for (const auto& [name, st] : report.stats)
        stats[name] = json{
            {"min_gap", st.min_gap}, {"mean_gap", st.mean_gap}, {"count", st.count}};
    return json{{"trials", report.trials}, {"failures", failures}, {"stats", stats}};
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& dims) {
    const std::size_t colon = dims.find(':');
    try {
        if (colon == std::string::npos) {
            const std::size_t d = std::stoul(dims);
            return {d, d};
        }
        return {std::stoul(dims.substr(0, colon)), std::stoul(dims.substr(colon + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("verify: --dims expects LO:HI, got '" + dims + "'");
    }
}

const char* relation_label(ReproRelation rel) {
    return rel == ReproRelation::Approx ? "~" : ">";
}

json repro_json(const std::vector<ReproCaseResult>& cases) {
    json out = json::array();
    bool all = true;
    for (const ReproCaseResult& c : cases) {
        json checks = json::array();
        for (const ReproCheck& k : c.checks)
            checks.push_back(json{{"quantity", k.quantity},
                                  {"computed", k.computed},
                                  {"expected", k.expected},
                                  {"relation", relation_label(k.relation)},
                                  {"tolerance", k.tolerance},
                                  {"passed", k.passed}});
        out.push_back(json{
            {"id", c.id}, {"citation", c.citation}, {"checks", checks}, {"passed", c.passed}});
        all = all && c.passed;
    }
    return json{{"cases", out}, {"passed", all}};
}

void print_repro_table(const std::vector<ReproCaseResult>& cases, std::ostream& os) {
    os << std::left << std::setw(20) << "case" << std::setw(26) << "quantity" << std::right
       << std::setw(12) << "computed" << std::setw(12) << "expected" << "  rel"
       << "  status  citation\n";
    os << std::string(100, '-') << "\n";
    std::size_t checks = 0, failing = 0;
    for (const ReproCaseResult& c : cases) {
        for (const ReproCheck& k : c.checks) {
            ++checks;
            if (!k.passed) ++failing;
            os << std::left << std::setw(20) << c.id << std::setw(26) << k.quantity
               << std::right << std::setw(12) << std::fixed << std::setprecision(5)
               << k.computed << std::setw(12) << k.expected << "  " << std::setw(3) << std::left
               << relation_label(k.relation) << std::setw(8)
               << (k.passed ? "ok" : "FAIL") << c.citation << "\n";
        }
    }
    os << std::string(100, '-') << "\n";
    os << cases.size() << " cases, " << checks << " checks, " << failing << " failing\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"numerical radius, operator norm, and spectral radius toolkit"};
    app.require_subcommand(1);

    CLI::App* rad = app.add_subcommand("radius", "print the three radii of a matrix file");
    std::string rad_file;
    rad->add_option("file", rad_file, "JSON matrix file")->required();

    CLI::App* bnd = app.add_subcommand("bounds", "evaluate a bound family on matrix files");
    std::string bnd_kind;
    bnd->add_option("kind", bnd_kind, "pair|block|2x2|row|self|spectral-sum")
        ->required()
        ->check(CLI::IsMember({"pair", "block", "2x2", "row", "self", "spectral-sum"}));
    std::vector<std::string> bnd_files;
    bnd->add_option("files", bnd_files, "input files")->required();

    CLI::App* ver = app.add_subcommand("verify", "run the seeded property-check suite");
    std::uint64_t trials = 100;
    ver->add_option("--trials", trials, "number of independent trials");
    std::string dims = "2:5";
    ver->add_option("--dims", dims, "dimension range LO:HI sampled per trial");
    std::uint64_t seed = 0;
    ver->add_option("--seed", seed, "base seed");
    std::vector<std::string> checks;
    ver->add_option("--checks", checks, "comma-separated check names (default: all)")
        ->delimiter(',');
    unsigned threads = 1;
    ver->add_option("--threads", threads, "worker threads (result is thread-count independent)");

    CLI::App* rep = app.add_subcommand("repro", "reproduce the embedded reference examples");
    bool rep_json = false;
    rep->add_flag("--json", rep_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (rad->parsed()) {
            const SpectralSummary s = spectral_summary(load_matrix(rad_file));
            std::cout << summary_json(s).dump(2) << "\n";
            return 0;
        }
        if (bnd->parsed()) {
            std::cout << bounds_json(bnd_kind, bnd_files).dump(2) << "\n";
            return 0;
        }
        if (ver->parsed()) {
            SuiteConfig config;
            config.trials = trials;
            std::tie(config.dim_lo, config.dim_hi) = parse_dims(dims);
            config.seed = seed;
            config.checks = checks.empty() ? all_check_names() : checks;
            config.threads = threads;
            const SuiteReport report = run_suite(config);
            std::cout << suite_report_json(report).dump(2) << "\n";
            return report.failures.empty() ? 0 : 1;
        }
        if (rep->parsed()) {
            const std::vector<ReproCaseResult> cases = run_repro();
            bool all = true;
            for (const ReproCaseResult& c : cases) all = all && c.passed;
            if (rep_json)
                std::cout << repro_json(cases).dump(2) << "\n";
            else
                print_repro_table(cases, std::cout);
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace nrb
