#pragma once

#include "crtkit/abelian.hpp"

#include <array>
#include <string>
#include <vector>

namespace crtkit {

// The three graded parts of a CRT-module. Everything is stored on a uniform
// Z/8 grading; the real Bott element acts as the identity under the mod-8
// indexing, while the complex and self-conjugate Bott maps are stored
// explicitly (betaU, betaT) and must be isomorphisms.
enum class Part { O, U, T };

// The twelve stored map families. Index position n always holds the map
// whose domain is degree n; the codomain degree is n + degree_shift mod 8.
enum class MapFamily { EtaO, Xi, BetaU, BetaT, C, R, Eps, Zeta, PsiU, PsiT, Gamma, Tau };

struct FamilyInfo {
    MapFamily id;
    const char* name;
    Part domain;
    Part codomain;
    int degree_shift;
};

// Fixed order, also the wire order of the document format.
inline constexpr std::array<FamilyInfo, 12> kMapFamilies{{
    {MapFamily::EtaO, "etaO", Part::O, Part::O, 1},
    {MapFamily::Xi, "xi", Part::O, Part::O, 4},
    {MapFamily::BetaU, "betaU", Part::U, Part::U, 2},
    {MapFamily::BetaT, "betaT", Part::T, Part::T, 4},
    {MapFamily::C, "c", Part::O, Part::U, 0},
    {MapFamily::R, "r", Part::U, Part::O, 0},
    {MapFamily::Eps, "eps", Part::O, Part::T, 0},
    {MapFamily::Zeta, "zeta", Part::T, Part::U, 0},
    {MapFamily::PsiU, "psiU", Part::U, Part::U, 0},
    {MapFamily::PsiT, "psiT", Part::T, Part::T, 0},
    {MapFamily::Gamma, "gamma", Part::U, Part::T, -1},
    {MapFamily::Tau, "tau", Part::T, Part::O, 1},
}};

const FamilyInfo& family_info(MapFamily f);
const char* part_name(Part p);

inline int mod8(int n) { return ((n % 8) + 8) % 8; }

// Raw storage: groups plus matrices. A freshly parsed or mutated module may
// be structurally broken (wrong shapes, ill-defined entries); that is what
// validate_structure reports. The relation and exactness checkers expect a
// structurally valid module.
struct CRTModule {
    std::array<PresentedGroup, 8> o, u, t;
    std::array<IntMatrix, 8> eta_o, xi, beta_u, beta_t, c, r, eps, zeta, psi_u, psi_t, gamma, tau;

    const std::array<PresentedGroup, 8>& part(Part p) const;
    std::array<PresentedGroup, 8>& part(Part p);
    const std::array<IntMatrix, 8>& family(MapFamily f) const;
    std::array<IntMatrix, 8>& family(MapFamily f);

    const PresentedGroup& group(Part p, int n) const { return part(p)[mod8(n)]; }
    const IntMatrix& matrix(MapFamily f, int n) const { return family(f)[mod8(n)]; }

    bool operator==(const CRTModule&) const = default;
};

// Builds the GroupHom for a stored map; only meaningful once
// validate_structure is clean.
GroupHom module_hom(const CRTModule& m, MapFamily f, int n);

// eta_T = gamma . betaU . zeta and omega = betaT . gamma . zeta are derived,
// never stored.
GroupHom derived_eta_t(const CRTModule& m, int n); // T_n -> T_{n+1}
GroupHom derived_omega(const CRTModule& m, int n); // T_n -> T_{n+3}

struct StructureViolation {
    std::string family;
    int degree;
    std::string what;
};

struct RelationViolation {
    std::string relation_id;
    int degree;
    IntMatrix lhs;
    IntMatrix rhs;
};

struct ExactnessViolation {
    std::string sequence_id;
    std::string node;
    int degree;
    Exactness verdict;
};

struct ViolationReport {
    std::vector<StructureViolation> structure;
    std::vector<RelationViolation> relations;
    std::vector<ExactnessViolation> exactness;

    bool empty() const { return structure.empty() && relations.empty() && exactness.empty(); }
    void merge(ViolationReport other);
};

// Human-readable statement of a relation id ("R10" -> "psiU.betaU = -betaU.psiU").
std::string relation_statement(const std::string& relation_id);

// Shapes, well-definedness of every stored map, and invertibility of betaU
// and betaT. Total: failures land in the report.
ViolationReport validate_structure(const CRTModule& m);

// The full relation list at every degree mod 8 (R1..R27; R18 and R20 define
// the derived maps). strict additionally enforces the identities forced by
// the coefficient rings (S1..S15). A structurally broken module yields its
// structure report with no relations checked.
ViolationReport check_crt_relations(const CRTModule& m, bool strict = false);

// Exactness of the three acyclicity sequences at all nine node families,
// every degree mod 8.
ViolationReport check_acyclicity(const CRTModule& m);

// Degree shift: shift(m, i) has group(p, n) = m.group(p, n - i).
CRTModule shift(const CRTModule& m, int i);

// Degreewise direct sum with block-diagonal maps, re-presented canonically.
CRTModule direct_sum(const CRTModule& a, const CRTModule& b);

// Canonical orders per part and degree: equal fingerprints mean degreewise
// isomorphic graded groups. Necessary, not sufficient, for isomorphism of
// the modules themselves.
struct Fingerprint {
    std::array<std::vector<Int>, 8> o, u, t;
    const std::array<std::vector<Int>, 8>& part(Part p) const;
    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const CRTModule& m);

struct PartComparison {
    bool agree = true;
    int first_diff_degree = -1; // meaningful when !agree
    std::vector<Int> lhs_orders;
    std::vector<Int> rhs_orders;
};

struct ComparisonVerdict {
    PartComparison o, u, t;
    const PartComparison& part(Part p) const;
    bool distinguishable() const { return !o.agree || !u.agree || !t.agree; }
};

ComparisonVerdict compare(const CRTModule& a, const CRTModule& b);

} // namespace crtkit
