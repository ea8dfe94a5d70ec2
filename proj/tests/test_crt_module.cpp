#include "crtkit/crt_module.hpp"

#include "crtkit/pconstruct.hpp"

#include <doctest.h>

#include <set>

using namespace crtkit;

namespace {

CRTModule fixture_g() { return build_p(builtin_example("G-alpha")); }
CRTModule fixture_h() { return build_p(builtin_example("H-beta")); }

bool passes_all(const CRTModule& m) {
    return validate_structure(m).empty() && check_crt_relations(m, true).empty() &&
           check_acyclicity(m).empty();
}

std::set<std::string> relation_ids(const ViolationReport& r) {
    std::set<std::string> ids;
    for (const auto& v : r.relations)
        ids.insert(v.relation_id);
    return ids;
}

} // namespace

TEST_CASE("zero module satisfies everything") {
    CRTModule z;
    CHECK(validate_structure(z).empty());
    CHECK(check_crt_relations(z, true).empty());
    CHECK(check_acyclicity(z).empty());
    for (int n = 0; n < 8; ++n) {
        CHECK(fingerprint(z).o[n].empty());
        CHECK(fingerprint(z).u[n].empty());
        CHECK(fingerprint(z).t[n].empty());
    }
}

TEST_CASE("validate_structure flags broken modules") {
    SUBCASE("betaU zeroed on a nontrivial group") {
        CRTModule m = fixture_g();
        m.beta_u[0] = IntMatrix(4, 4);
        auto report = validate_structure(m);
        REQUIRE(report.structure.size() == 1);
        CHECK(report.structure[0].family == "betaU");
        CHECK(report.structure[0].degree == 0);
        CHECK(report.structure[0].what == "not invertible");
        // downstream checkers refuse to run past a broken structure
        CHECK(!check_crt_relations(m, true).empty());
        CHECK(!check_acyclicity(m).empty());
    }
    SUBCASE("c matrix of the wrong shape") {
        CRTModule m = fixture_g();
        m.c[0] = IntMatrix(2, 2);
        auto report = validate_structure(m);
        REQUIRE(report.structure.size() == 1);
        CHECK(report.structure[0].family == "c");
        CHECK(report.structure[0].what.find("shape") != std::string::npos);
    }
    SUBCASE("ill-defined entry") {
        CRTModule m = fixture_h();
        // send a Z2 generator of U0 = Z2xZ2xZ4 onto the Z4 generator
        m.psi_u[0].at(2, 0) = 1;
        auto report = validate_structure(m);
        REQUIRE(!report.structure.empty());
        CHECK(report.structure[0].family == "psiU");
        CHECK(report.structure[0].what.find("ill-defined") != std::string::npos);
    }
}

TEST_CASE("relation checker pins down mutations") {
    CRTModule m = fixture_g();
    m.psi_u[0] = IntMatrix::identity(4); // alpha is not the identity
    CHECK(validate_structure(m).empty());
    auto report = check_crt_relations(m, true);
    REQUIRE(!report.relations.empty());
    auto ids = relation_ids(report);
    CHECK((ids.count("R2") || ids.count("R10")));
    for (const auto& v : report.relations) {
        CHECK(!relation_statement(v.relation_id).empty());
        CHECK(v.degree >= 0);
        CHECK(v.degree < 8);
    }
}

TEST_CASE("acyclicity checker pins down mutations") {
    CRTModule m = fixture_g();
    m.tau[1] = IntMatrix(m.tau[1].rows(), m.tau[1].cols()); // zero out tau_1
    CHECK(validate_structure(m).empty());

    auto relations = check_crt_relations(m, true);
    CHECK(relation_ids(relations).count("R3"));

    auto report = check_acyclicity(m);
    REQUIRE(!report.exactness.empty());
    bool c_sequence_o_node = false;
    for (const auto& v : report.exactness)
        if (v.sequence_id == "C" && v.node.find("O") == 0)
            c_sequence_o_node = true;
    CHECK(c_sequence_o_node);
}

TEST_CASE("shift") {
    CRTModule m = fixture_g();
    CHECK(shift(m, 0) == m);
    CHECK(shift(m, 8) == m);
    CHECK(shift(shift(m, 3), 2) == shift(m, 5));
    CHECK(shift(shift(m, 5), -5) == m);
    CHECK(passes_all(shift(m, 2)));

    // shifting is a bijection on pass/fail status
    CRTModule bad = fixture_g();
    bad.psi_u[0] = IntMatrix::identity(4);
    for (int i = 1; i <= 8; ++i) {
        CHECK(passes_all(shift(m, i)));
        CHECK(!check_crt_relations(shift(bad, i), true).empty());
    }
}

TEST_CASE("direct sum") {
    CRTModule m = fixture_g();
    CHECK(direct_sum(m, CRTModule{}) == m);
    CHECK(direct_sum(CRTModule{}, m) == m);

    CRTModule sum = direct_sum(m, fixture_h());
    CHECK(passes_all(sum));

    // fingerprints merge slotwise (canonicalized union of the orders)
    Fingerprint fm = fingerprint(m), fh = fingerprint(fixture_h()), fs = fingerprint(sum);
    for (int n = 0; n < 8; ++n) {
        std::vector<Int> merged = fm.u[n];
        merged.insert(merged.end(), fh.u[n].begin(), fh.u[n].end());
        CHECK(fs.u[n] == canonicalize(merged).orders());
    }
    CHECK(fs.u[0] == std::vector<Int>{2, 2, 2, 2, 2, 2, 4});

    // coprime torsion merges into a single factor
    CRTModule m3 = build_p(InvolutiveGroup(PresentedGroup({3}), GroupHom::identity(PresentedGroup({3}))));
    CRTModule mixed = direct_sum(m, m3);
    CHECK(passes_all(mixed));
    CHECK(fingerprint(mixed).u[0] == std::vector<Int>{2, 2, 2, 6});
}

TEST_CASE("fingerprint and compare") {
    CRTModule mg = fixture_g();
    CRTModule mh = fixture_h();
    Fingerprint fg = fingerprint(mg);

    CHECK(fg.o[0] == std::vector<Int>{2, 2});
    CHECK(fg.o[1].empty());
    CHECK(fg.u[0] == std::vector<Int>{2, 2, 2, 2});
    CHECK(fingerprint(mh).u[0] == std::vector<Int>{2, 2, 4});

    ComparisonVerdict v = compare(mg, mh);
    CHECK(v.o.agree);
    CHECK(v.t.agree);
    CHECK(!v.u.agree);
    CHECK(v.u.first_diff_degree == 0);
    CHECK(v.u.lhs_orders == std::vector<Int>{2, 2, 2, 2});
    CHECK(v.u.rhs_orders == std::vector<Int>{2, 2, 4});
    CHECK(v.distinguishable());

    CHECK(!compare(mg, mg).distinguishable());
    // the table pattern is 4-periodic
    CHECK(!compare(mg, shift(mg, 4)).distinguishable());
    // with G+ = Z3 and G- = 0, a shift by 2 moves the O-part visibly
    CRTModule m3 = build_p(InvolutiveGroup(PresentedGroup({3}), GroupHom::identity(PresentedGroup({3}))));
    CHECK(!compare(m3, shift(m3, 4)).distinguishable());
    CHECK(compare(m3, shift(m3, 2)).distinguishable());
}

TEST_CASE("derived maps on the fixtures") {
    CRTModule mg = fixture_g();
    for (int n = 0; n < 8; ++n)
        CHECK(derived_eta_t(mg, n).is_zero());
    // omega_0 = betaT.gamma.zeta = (1+alpha) restricted to the fixed part,
    // i.e. multiplication by 2 = 0 on 2-torsion
    CHECK(derived_omega(mg, 0).is_zero());

    // on (Z^2, swap) the same composite is multiplication by 2 on Z: nonzero
    PresentedGroup z2(std::vector<Int>{0, 0});
    InvolutiveGroup swap2(z2, GroupHom(z2, z2, IntMatrix::from_rows({{0, 1}, {1, 0}})));
    CRTModule mz = build_p(swap2);
    CHECK(!derived_omega(mz, 0).is_zero());
    CHECK(derived_omega(mz, 0).matrix() == IntMatrix::from_rows({{2}}));
}

TEST_CASE("mutation sensitivity of the verifier") {
    const CRTModule original = fixture_g();

    // congruence of a mutated family with the original, modulo codomain
    // relations, slot by slot
    auto congruent = [&](const CRTModule& mut, MapFamily f) {
        const FamilyInfo& fi = family_info(f);
        for (int n = 0; n < 8; ++n) {
            const IntMatrix& a = original.matrix(f, n);
            const IntMatrix& b = mut.matrix(f, n);
            if (a.rows() != b.rows() || a.cols() != b.cols())
                return false;
            const PresentedGroup& cod = original.group(fi.codomain, n + fi.degree_shift);
            if (!(cod.reduce_matrix(a) == cod.reduce_matrix(b)))
                return false;
        }
        return true;
    };

    int killed = 0, silent = 0;
    for (const auto& fi : kMapFamilies) {
        auto check_mutation = [&](CRTModule mut) {
            bool pass = validate_structure(mut).empty() &&
                        check_crt_relations(mut, true).empty() &&
                        check_acyclicity(mut).empty();
            if (pass) {
                // silent mutations must be provably no-ops
                CHECK(congruent(mut, fi.id));
                ++silent;
            } else {
                ++killed;
            }
        };

        CRTModule zeroed = original;
        for (int n = 0; n < 8; ++n)
            zeroed.family(fi.id)[n] =
                IntMatrix(zeroed.family(fi.id)[n].rows(), zeroed.family(fi.id)[n].cols());
        check_mutation(zeroed);

        CRTModule negated = original;
        for (int n = 0; n < 8; ++n)
            negated.family(fi.id)[n] = negated.family(fi.id)[n].scaled(-1);
        check_mutation(negated);

        CRTModule swapped02 = original;
        std::swap(swapped02.family(fi.id)[0], swapped02.family(fi.id)[2]);
        check_mutation(swapped02);

        CRTModule swapped01 = original;
        std::swap(swapped01.family(fi.id)[0], swapped01.family(fi.id)[1]);
        check_mutation(swapped01);
    }
    // on the all-2-torsion fixture: zeroing kills the ten nonzero families
    // (etaO and xi are already congruent to zero), negation is always silent,
    // the 0<->2 swap is silent, and the 0<->1 swap breaks shapes except for
    // betaT and psiT, which are the identity on equal-rank slots
    CHECK(killed == 10 + 10);
    CHECK(silent == 2 + 12 + 12 + 2);
}
