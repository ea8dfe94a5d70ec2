#pragma once

#include "crtkit/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crtkit {

// Finitely generated abelian group in invariant-factor form. orders()[i] is
// the order of canonical generator i, 0 meaning infinite order; finite orders
// are >= 2, satisfy d1 | d2 | ..., and precede the zeros. Two groups are
// equal (isomorphic) iff their orders lists are equal.
class PresentedGroup {
  public:
    PresentedGroup() = default; // trivial group
    // Canonicalizes an arbitrary orders list (trivial factors are deleted,
    // coprime factors merged). Rejects negative entries.
    explicit PresentedGroup(std::vector<Int> orders);

    const std::vector<Int>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    bool is_trivial() const { return orders_.empty(); }
    bool is_finite() const;
    std::optional<Int> order() const; // nullopt when infinite

    // Columns generate the relation lattice: d_i * e_i for each finite order.
    IntMatrix relation_matrix() const;

    // Coordinatewise reduction into [0, d_i) on finite coordinates.
    std::vector<Int> reduce(std::vector<Int> v) const;
    // Row i of m reduced modulo orders()[i] (matrix columns are elements).
    IntMatrix reduce_matrix(IntMatrix m) const;

    bool operator==(const PresentedGroup&) const = default;

  private:
    std::vector<Int> orders_;
};

PresentedGroup canonicalize(const std::vector<Int>& orders);
bool groups_isomorphic(const PresentedGroup& a, const PresentedGroup& b);

// "Z2xZ2", "Z", "Z2xZ4x Z^2"-style display name ("0" for the trivial group).
std::string group_name(const PresentedGroup& g);

// Homomorphism between presented groups. matrix() is codomain-rank x
// domain-rank, column j = image of domain generator j, entries reduced
// modulo the codomain orders. Construction verifies well-definedness: for
// each domain generator of finite order d, d * (column j) must lie in the
// codomain relation lattice. Equality is equality of reduced matrices, i.e.
// congruence modulo codomain relations (-1 = 1 on 2-torsion).
class GroupHom {
  public:
    GroupHom(); // zero endomorphism of the trivial group
    GroupHom(PresentedGroup domain, PresentedGroup codomain, IntMatrix matrix);

    static GroupHom identity(const PresentedGroup& g);
    static GroupHom zero(PresentedGroup domain, PresentedGroup codomain);

    const PresentedGroup& domain() const { return domain_; }
    const PresentedGroup& codomain() const { return codomain_; }
    const IntMatrix& matrix() const { return matrix_; }

    std::vector<Int> apply(const std::vector<Int>& x) const;
    bool is_zero() const { return matrix_.is_zero(); }
    GroupHom scaled(const Int& k) const;

    bool operator==(const GroupHom&) const = default;

  private:
    PresentedGroup domain_;
    PresentedGroup codomain_;
    IntMatrix matrix_;
};

// g after f; f.codomain() must equal g.domain().
GroupHom compose(const GroupHom& g, const GroupHom& f);
GroupHom hom_sum(const GroupHom& a, const GroupHom& b);
GroupHom hom_diff(const GroupHom& a, const GroupHom& b);

// Non-throwing well-definedness probe: index of the first violating domain
// generator, or nullopt if the matrix defines a homomorphism.
std::optional<std::size_t> ill_defined_generator(const PresentedGroup& domain,
                                                 const PresentedGroup& codomain,
                                                 const IntMatrix& matrix);

// Subgroup of an ambient group, carried as a list of generating elements in
// ambient coordinates. Never re-canonicalized in place; extracting an
// abstract presentation is a separate operation.
struct Subgroup {
    PresentedGroup ambient;
    IntMatrix generators; // ambient.rank() x k
};

Subgroup full_subgroup(const PresentedGroup& g);
Subgroup kernel(const GroupHom& f);
Subgroup image(const GroupHom& f);

// S <= T inside the shared ambient group.
bool subgroup_leq(const Subgroup& s, const Subgroup& t);

enum class Exactness {
    Exact,            // im f = ker g
    ComplexNotExact,  // im f < ker g
    NotAComplex,      // g o f != 0
};

std::string to_string(Exactness e);

// Exactness of A --f--> B --g--> C at B, via two subgroup comparisons.
Exactness exact_at(const GroupHom& f, const GroupHom& g);

// Invariant-factor presentation of the subgroup generated by S's columns,
// together with the inclusion of the presented group back into the ambient.
struct SubgroupPresentation {
    PresentedGroup group;
    GroupHom inclusion; // group -> ambient, injective
};

SubgroupPresentation subgroup_presentation(const Subgroup& s);
PresentedGroup subgroup_as_group(const Subgroup& s);

// Factor f through a subgroup containing its image: returns g with
// sub.inclusion o g = f. Throws if some f(generator) falls outside.
GroupHom corestrict(const GroupHom& f, const SubgroupPresentation& sub);

bool is_isomorphism(const GroupHom& f);
GroupHom inverse_hom(const GroupHom& f); // throws unless f is an isomorphism

// Every element of a finite group, each exactly once, coordinates in
// lexicographic order. Rejects infinite groups and |G| > max_size.
std::vector<std::vector<Int>> enumerate_elements(const PresentedGroup& g,
                                                 const Int& max_size = 4096);

// Quotient Z^num_gens / (column span of relations), with the change of
// coordinates both ways: to_canonical maps raw coordinates to canonical ones,
// from_canonical expresses each canonical generator in raw coordinates.
struct QuotientPresentation {
    PresentedGroup group;
    IntMatrix to_canonical;   // group.rank() x num_gens
    IntMatrix from_canonical; // num_gens x group.rank()
};

QuotientPresentation present_quotient(std::size_t num_gens, const IntMatrix& relations);

} // namespace crtkit
