#include "nrb/repro.hpp"

#include <cmath>
#include <utility>

#include "nrb/bounds.hpp"
#include "nrb/matrix.hpp"
#include "nrb/spectra.hpp"

namespace nrb {

namespace {

ReproCheck approx(std::string quantity, double computed, double expected) {
    ReproCheck c;
    c.quantity = std::move(quantity);
    c.computed = computed;
    c.expected = expected;
    c.relation = ReproRelation::Approx;
    c.tolerance = kReproTolerance;
    c.passed = std::abs(computed - expected) <= kReproTolerance;
    return c;
}

ReproCheck strictly_greater(std::string quantity, double computed, double right_side) {
    ReproCheck c;
    c.quantity = std::move(quantity);
    c.computed = computed;
    c.expected = right_side;
    c.relation = ReproRelation::StrictlyGreater;
    c.tolerance = 0.0;
    c.passed = computed > right_side;
    return c;
}

ReproCaseResult finish(std::string id, std::string citation, std::vector<ReproCheck> checks) {
    ReproCaseResult r;
    r.id = std::move(id);
    r.citation = std::move(citation);
    r.checks = std::move(checks);
    r.passed = true;
    for (const ReproCheck& c : r.checks) r.passed = r.passed && c.passed;
    return r;
}

ReproCaseResult case_rem22_ex1() {
    const ComplexMatrix a = ComplexMatrix::from_rows({{4.0, 1.0}, {3.0, 3.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{4.0, 1.0}, {-3.0, -1.0}});
    const PairBoundReport rep = pair_bounds(a, b);
    return finish("rem22-ex1", "Remark 2.2, first example",
                  {approx("lemma21", rep.lemma21, 9.567),
                   approx("lemma22", rep.lemma22, 9.10612)});
}

ReproCaseResult case_rem22_ex2() {
    const ComplexMatrix a = ComplexMatrix::from_rows({{2.0, 2.0}, {-1.0, 2.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{3.0, 4.0}, {4.0, 1.0}});
    const PairBoundReport rep = pair_bounds(a, b);
    return finish("rem22-ex2", "Remark 2.2, second example",
                  {approx("lemma21", rep.lemma21, 9.02776),
                   approx("lemma22", rep.lemma22, 9.27186)});
}

ReproCaseResult case_cor1_remark() {
    const ComplexMatrix a = ComplexMatrix::from_rows({{-1.0, -2.0}, {-1.0, 2.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{2.0, 1.0}, {0.0, -2.0}});
    const ComplexMatrix c = ComplexMatrix::from_rows({{-3.0, -1.0}, {-3.0, -3.0}});
    const ComplexMatrix d = ComplexMatrix::from_rows({{-2.0, 3.0}, {-3.0, 0.0}});
    const TwoByTwoBoundReport rep = two_by_two_bounds(a, b, c, d);
    std::vector<ReproCheck> checks;
    checks.push_back(approx("hirzallah", rep.hirzallah.value(), 9.03276));
    checks.push_back(approx("cor1", rep.cor1, 6.50583));
    return finish("cor1-remark", "Remark 3.2", std::move(checks));
}

ReproCaseResult case_sh1_sh2_remark() {
    const ComplexMatrix a = ComplexMatrix::from_rows({{3.0, 2.0}, {-1.0, -3.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, -1.0}});
    const RowBoundReport rep = row_bounds(a, b);
    const BlockMatrix row = make_block_matrix(
        {2, 2}, {a, b, ComplexMatrix(2, 2), ComplexMatrix(2, 2)});
    const double w = numerical_radius(assemble(row));
    return finish("sh1-sh2-remark", "Remark 3.3",
                  {approx("sh1", rep.sh1, 3.19774),
                   approx("sh2", rep.sh2, 4.64893),
                   approx("omega-row-vs-sh1", w, rep.sh1)});
}

ReproCaseResult case_shebrawi3_remark() {
    const ComplexMatrix a = ComplexMatrix::from_rows({{2.0, 1.0}, {-1.0, -3.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{-2.0, 0.0}, {-3.0, 3.0}});
    const ComplexMatrix c = ComplexMatrix::from_rows({{2.0, 1.0}, {-3.0, -3.0}});
    const ComplexMatrix d = ComplexMatrix::from_rows({{2.0, -3.0}, {3.0, -2.0}});
    const TwoByTwoBoundReport rep = two_by_two_bounds(a, b, c, d);
    return finish("shebrawi3-remark", "Remark 3.4",
                  {approx("shebrawi3", rep.shebrawi3, 18.454),
                   approx("cor1", rep.cor1, 7.41238)});
}

ReproCaseResult case_kittaneh_remark() {
    const ComplexMatrix b = ComplexMatrix::from_rows({{-4.0, 7.0}, {-4.0, -8.0}});
    const SelfBoundReport rep = self_bounds(b);
    const double w = numerical_radius(b);
    return finish("kittaneh-remark", "Remark 3.5",
                  {approx("omega", w, 8.69626),
                   approx("c7", rep.c7, 9.74488),
                   approx("kittaneh", rep.kittaneh, 9.9823),
                   strictly_greater("c7-above-omega", rep.c7, w),
                   strictly_greater("kittaneh-above-c7", rep.kittaneh, rep.c7)});
}

ReproCaseResult case_counterexample_4x4() {
    const ComplexMatrix t = ComplexMatrix::from_rows({{-3.0, 2.0, -1.0, -1.0},
                                                      {-2.0, 2.0, 3.0, -1.0},
                                                      {-2.0, 3.0, 3.0, -2.0},
                                                      {1.0, 1.0, 0.0, -2.0}});
    const BlockMatrix blocks = split(t, {2, 2});
    ComplexMatrix omegas(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            omegas(i, j) = numerical_radius(blocks.block(i, j));
    const double lhs = numerical_radius(t);
    const double rhs = numerical_radius(omegas);
    return finish("counterexample-4x4", "Section 1 counterexample",
                  {strictly_greater("omega-full-vs-omega-of-omegas", lhs, rhs)});
}

}  // namespace

std::vector<ReproCaseResult> run_repro() {
    return {case_rem22_ex1(),     case_rem22_ex2(),       case_cor1_remark(),
            case_sh1_sh2_remark(), case_shebrawi3_remark(), case_kittaneh_remark(),
            case_counterexample_4x4()};
}

}  // namespace nrb
