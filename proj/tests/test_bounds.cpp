#include <catch2/catch_amalgamated.hpp>

#include "dscode/bounds.hpp"

using namespace dscode;

TEST_CASE("griesmer sums") {
    CHECK(griesmer_sum(3, 3, 13) == 20);
    CHECK(griesmer_sum(3, 4, 37) == 57);
    CHECK(griesmer_sum(3, 1, 42) == 42);
    CHECK(griesmer_sum(7, 1, 5) == 5);
    CHECK_THROWS_AS(griesmer_sum(3, 0, 5), CodeError);
}

TEST_CASE("griesmer iff certificate on the worked families") {
    const PrimeField f3(3);
    const SubsetFamily ex35(3, {{{1, 2}, {3}}, {{1}}});
    const auto code35 = DefiningCode::build(ex35, f3);
    const auto cert = check_griesmer_iff(ex35, code35);
    CHECK(cert.is_griesmer);
    CHECK(cert.all_blocks_disjoint);
    CHECK(cert.M == 2);
    CHECK(cert.M_le_p_minus_1);
    CHECK_FALSE(cert.conditional);
    CHECK(cert.griesmer_sum_value == 20);

    const PrimeField f5(5);
    const SubsetFamily sec4(3, {{{1, 2}, {2, 3}}});
    const auto code4 = DefiningCode::build(sec4, f5);
    const auto cert4 = check_griesmer_iff(sec4, code4);
    CHECK_FALSE(cert4.is_griesmer);
    CHECK_FALSE(cert4.all_blocks_disjoint);
    CHECK(cert4.griesmer_sum_value == 19);
    CHECK(cert4.n == 20);
}

TEST_CASE("intersecting pair is never a Griesmer code") {
    // [p^2-p, 3, p^2-2p] misses the Griesmer sum by one for every p.
    for (int p : {3, 5, 7}) {
        const PrimeField f(p);
        const SubsetFamily fam(3, {{{1, 2}, {2, 3}}});
        const auto code = DefiningCode::build(fam, f);
        CHECK(code.n() == p * p - p);
        CHECK(code.d() == p * p - 2 * p);
        const auto cert = check_griesmer_iff(fam, code);
        CHECK_FALSE(cert.is_griesmer);
        CHECK_FALSE(cert.combinatorial_says_griesmer);
        CHECK(cert.griesmer_sum_value == code.n() - 1);
    }
}

TEST_CASE("distance optimality routes") {
    const PrimeField f3(3);
    const SubsetFamily ex37(4, {{{1, 2, 3}, {3, 4}}, {{1, 2}, {3, 4}}});
    CHECK(distance_optimal_sufficient(ex37, f3));

    // Griesmer codes are distance-optimal; both routes agree.
    const SubsetFamily ex35(3, {{{1, 2}, {3}}, {{1}}});
    const auto code35 = DefiningCode::build(ex35, f3);
    CHECK(check_griesmer_iff(ex35, code35).is_griesmer);
    CHECK(distance_optimal_by_griesmer(3, 20, 3, 13));

    CHECK(distance_optimal_by_griesmer(3, 56, 4, 36));
    CHECK_FALSE(distance_optimal_by_griesmer(3, 13, 3, 8));
}

TEST_CASE("sufficient condition implies the direct route on a sweep") {
    const PrimeField f3(3);
    const int m = 3;
    std::vector<IndexSet> subsets;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        IndexSet s;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        subsets.push_back(s);
    }
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i; j < subsets.size(); ++j) {
            const SubsetFamily fam(m, {{subsets[i], subsets[j]}});
            if (!satisfies_property_Is(fam).satisfied) continue;
            long long sum = 0;
            for (const auto& s : fam.flattened()) sum += ipow(3, static_cast<int>(s.size()) - 1);
            if (sum >= ipow(3, m - 1)) continue;
            const auto code = DefiningCode::build(fam, f3);
            if (distance_optimal_sufficient(fam, f3))
                CHECK(distance_optimal_by_griesmer(3, code.n(), code.k(), code.d()));
        }
}

TEST_CASE("dimension upper bounds") {
    CHECK(kopt_upper(3, 9, 9) == 1);
    CHECK(kopt_upper(5, 15, 15) == 1);
    CHECK(kopt_upper(3, 13, 9) == 3);
    CHECK_THROWS_AS(kopt_upper(3, 5, 9), CodeError);

    // Monotonicity: never increases as n shrinks or d grows.
    for (int p : {2, 3, 5}) {
        for (long long d = 1; d <= 12; ++d)
            for (long long n = d; n <= 16; ++n) {
                const int k = kopt_upper(p, n, d);
                if (n > d) CHECK(kopt_upper(p, n - 1, d) <= k);
                if (d < n) CHECK(kopt_upper(p, n, d + 1) <= k);
            }
    }
}

TEST_CASE("alphabet-optimality bound") {
    const auto quinary = cm_alphabet_optimal(5, 20, 3, 15, 2, 4, true);
    CHECK(quinary.applicable);
    CHECK(quinary.bound == 3);
    CHECK(quinary.optimal);
    CHECK(quinary.locality_backed);

    const auto ternary = cm_alphabet_optimal(3, 8, 3, 5, 2, 2);
    CHECK(ternary.bound == 3);
    CHECK(ternary.optimal);

    const auto simplex = cm_alphabet_optimal(3, 13, 3, 9, 2, 3);
    CHECK(simplex.bound == 3);
    CHECK(simplex.optimal);

    // k = 2 with r = 2 leaves no admissible t.
    const auto degenerate = cm_alphabet_optimal(3, 4, 2, 3, 2, 3);
    CHECK_FALSE(degenerate.applicable);
    CHECK_FALSE(degenerate.optimal);
}

TEST_CASE("disjoint families reach the alphabet bound on a small sweep") {
    // Mutually disjoint subsets with M <= p-1 always achieve the bound for
    // delta = p-1.
    for (int p : {3, 5}) {
        const PrimeField f(p);
        const int m = 3;
        const std::vector<std::vector<IndexSet>> families = {
            {{1}}, {{2}}, {{1}, {2}}, {{1}, {3}}, {{1, 2}}, {{1, 2}, {3}}, {{2, 3}, {1}}};
        for (const auto& subsets : families) {
            if (static_cast<int>(subsets.size()) > p - 1) continue;
            const SubsetFamily fam(m, {subsets});
            const auto code = DefiningCode::build(fam, f);
            const auto cert =
                cm_alphabet_optimal(p, code.n(), code.k(), code.d(), 2, p - 1, true);
            CHECK(cert.applicable);
            CHECK(cert.optimal);
        }
    }
}

TEST_CASE("singleton-like defect") {
    CHECK(singleton_like_defect(20, 3, 15, 2, 4) == 0);
    CHECK(singleton_like_defect(13, 3, 9, 2, 3) == 0);
    CHECK(singleton_like_defect(10, 2, 5, 2, 2) == 4);
}

TEST_CASE("four-subset optimality conditions") {
    const PrimeField f3(3);
    const SubsetFamily ex37(4, {{{1, 2, 3}, {3, 4}}, {{1, 2}, {3, 4}}});
    const auto code = DefiningCode::build(ex37, f3);
    const auto res = four_set_optimality(ex37, code);
    // Sizes 3 > 2 = 2 = 2 at p = 3: the third condition fires.
    CHECK(res.optimal);
    CHECK(res.condition_fired == 3);
    CHECK(res.cross_check);
    CHECK(res.consistent);

    // A condition-(1) instance: M <= p-1 over F_5.
    const PrimeField f5(5);
    const SubsetFamily c1(4, {{{1, 2, 3}, {3, 4}}, {{1, 2}, {3, 4}}});
    const auto code5 = DefiningCode::build(c1, f5);
    const auto res5 = four_set_optimality(c1, code5);
    CHECK(res5.condition_fired == 1);
    CHECK(res5.optimal);
    CHECK(res5.cross_check);

    // Failing every condition is allowed; the certificate merely reports it.
    const SubsetFamily weak(5, {{{1, 2}, {2, 3}}, {{1, 2}, {2, 3}}});
    const auto codew = DefiningCode::build(weak, f5);
    const auto resw = four_set_optimality(weak, codew);
    CHECK_FALSE(resw.optimal);
    CHECK(resw.consistent);

    CHECK_THROWS_AS(
        four_set_optimality(SubsetFamily(3, {{{1, 2}, {3}}, {{1}}}),
                            DefiningCode::build(SubsetFamily(3, {{{1, 2}, {3}}, {{1}}}), f3)),
        CodeError);
}
