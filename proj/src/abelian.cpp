#include "crtkit/abelian.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace crtkit {

namespace {

bool is_canonical(const std::vector<Int>& orders) {
    bool seen_zero = false;
    Int prev = 0;
    for (const Int& d : orders) {
        if (d < 0)
            return false;
        if (d == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero || d < 2)
            return false;
        if (prev != 0 && d % prev != 0)
            return false;
        prev = d;
    }
    return true;
}

std::vector<Int> canonical_orders(std::vector<Int> orders) {
    for (const Int& d : orders)
        if (d < 0)
            throw std::invalid_argument("group orders must be nonnegative");
    if (is_canonical(orders))
        return orders;
    // invariant factors of Z^k / diag(orders), via the Smith form
    SmithDecomposition s = smith_normal_form(IntMatrix::diagonal(orders));
    std::vector<Int> out;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (s.D.at(i, i) != 1)
            out.push_back(s.D.at(i, i));
    return out;
}

} // namespace

PresentedGroup::PresentedGroup(std::vector<Int> orders)
    : orders_(canonical_orders(std::move(orders))) {}

bool PresentedGroup::is_finite() const {
    for (const Int& d : orders_)
        if (d == 0)
            return false;
    return true;
}

std::optional<Int> PresentedGroup::order() const {
    Int n = 1;
    for (const Int& d : orders_) {
        if (d == 0)
            return std::nullopt;
        n *= d;
    }
    return n;
}

IntMatrix PresentedGroup::relation_matrix() const {
    std::size_t finite = 0;
    for (const Int& d : orders_)
        if (d != 0)
            ++finite;
    IntMatrix m(rank(), finite);
    std::size_t j = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        if (orders_[i] != 0)
            m.at(i, j++) = orders_[i];
    return m;
}

std::vector<Int> PresentedGroup::reduce(std::vector<Int> v) const {
    if (v.size() != rank())
        throw std::invalid_argument("reduce: coordinate count mismatch");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (orders_[i] != 0)
            v[i] -= floor_div(v[i], orders_[i]) * orders_[i];
    return v;
}

IntMatrix PresentedGroup::reduce_matrix(IntMatrix m) const {
    if (m.rows() != rank())
        throw std::invalid_argument("reduce_matrix: row count mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (orders_[i] != 0)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) -= floor_div(m.at(i, j), orders_[i]) * orders_[i];
    return m;
}

PresentedGroup canonicalize(const std::vector<Int>& orders) {
    return PresentedGroup(orders);
}

bool groups_isomorphic(const PresentedGroup& a, const PresentedGroup& b) {
    return a == b;
}

std::string group_name(const PresentedGroup& g) {
    if (g.is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const Int& d : g.orders()) {
        if (!first)
            os << "x";
        if (d == 0)
            os << "Z";
        else
            os << "Z" << d;
        first = false;
    }
    return os.str();
}

std::optional<std::size_t> ill_defined_generator(const PresentedGroup& domain,
                                                 const PresentedGroup& codomain,
                                                 const IntMatrix& matrix) {
    for (std::size_t j = 0; j < domain.rank(); ++j) {
        const Int& d = domain.orders()[j];
        if (d == 0)
            continue;
        for (std::size_t i = 0; i < codomain.rank(); ++i) {
            const Int& e = codomain.orders()[i];
            Int v = d * matrix.at(i, j);
            if (e == 0 ? v != 0 : v % e != 0)
                return j;
        }
    }
    return std::nullopt;
}

GroupHom::GroupHom() = default;

GroupHom::GroupHom(PresentedGroup domain, PresentedGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    if (matrix.rows() != codomain_.rank() || matrix.cols() != domain_.rank()) {
        std::ostringstream os;
        os << "hom matrix shape " << matrix.rows() << "x" << matrix.cols() << " does not match "
           << codomain_.rank() << "x" << domain_.rank();
        throw std::invalid_argument(os.str());
    }
    if (auto j = ill_defined_generator(domain_, codomain_, matrix)) {
        std::ostringstream os;
        os << "ill-defined homomorphism: generator " << *j << " of order "
           << domain_.orders()[*j] << " does not map into the codomain relations";
        throw std::invalid_argument(os.str());
    }
    matrix_ = codomain_.reduce_matrix(std::move(matrix));
}

GroupHom GroupHom::identity(const PresentedGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.rank()));
}

GroupHom GroupHom::zero(PresentedGroup domain, PresentedGroup codomain) {
    IntMatrix m(codomain.rank(), domain.rank());
    return GroupHom(std::move(domain), std::move(codomain), std::move(m));
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& x) const {
    return codomain_.reduce(matrix_.apply(x));
}

GroupHom GroupHom::scaled(const Int& k) const {
    return GroupHom(domain_, codomain_, matrix_.scaled(k));
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (f.codomain() != g.domain())
        throw std::invalid_argument("compose: codomain of f is not the domain of g");
    return GroupHom(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

GroupHom hom_sum(const GroupHom& a, const GroupHom& b) {
    if (a.domain() != b.domain() || a.codomain() != b.codomain())
        throw std::invalid_argument("hom_sum: mismatched domains or codomains");
    return GroupHom(a.domain(), a.codomain(), a.matrix() + b.matrix());
}

GroupHom hom_diff(const GroupHom& a, const GroupHom& b) {
    return hom_sum(a, b.scaled(-1));
}

Subgroup full_subgroup(const PresentedGroup& g) {
    return {g, IntMatrix::identity(g.rank())};
}

namespace {

IntMatrix drop_zero_columns(const IntMatrix& m) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (!zero)
            keep.push_back(j);
    }
    IntMatrix out(m.rows(), keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            out.at(i, j) = m.at(i, keep[j]);
    return out;
}

} // namespace

Subgroup kernel(const GroupHom& f) {
    // x is in the kernel iff f(x) lands in the codomain relation lattice;
    // solve the lift condition on the augmented matrix and project back.
    IntMatrix aug = IntMatrix::hstack(f.matrix(), f.codomain().relation_matrix());
    IntMatrix k = kernel_lattice(aug);
    IntMatrix gens(f.domain().rank(), k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < f.domain().rank(); ++i)
            gens.at(i, j) = k.at(i, j);
    return {f.domain(), drop_zero_columns(f.domain().reduce_matrix(gens))};
}

Subgroup image(const GroupHom& f) {
    return {f.codomain(), drop_zero_columns(f.matrix())};
}

bool subgroup_leq(const Subgroup& s, const Subgroup& t) {
    if (s.ambient != t.ambient)
        throw std::invalid_argument("subgroup_leq: ambient groups differ");
    IntMatrix aug = IntMatrix::hstack(t.generators, t.ambient.relation_matrix());
    for (std::size_t j = 0; j < s.generators.cols(); ++j)
        if (!lattice_member(aug, s.generators.column(j)))
            return false;
    return true;
}

std::string to_string(Exactness e) {
    switch (e) {
    case Exactness::Exact:
        return "exact";
    case Exactness::ComplexNotExact:
        return "complex-but-not-exact";
    case Exactness::NotAComplex:
        return "not-a-complex";
    }
    return "?";
}

Exactness exact_at(const GroupHom& f, const GroupHom& g) {
    if (f.codomain() != g.domain())
        throw std::invalid_argument("exact_at: maps are not composable");
    Subgroup im = image(f);
    Subgroup ker = kernel(g);
    if (!subgroup_leq(im, ker))
        return Exactness::NotAComplex;
    if (!subgroup_leq(ker, im))
        return Exactness::ComplexNotExact;
    return Exactness::Exact;
}

QuotientPresentation present_quotient(std::size_t num_gens, const IntMatrix& relations) {
    if (relations.rows() != num_gens)
        throw std::invalid_argument("present_quotient: relation rows must equal generator count");
    SmithDecomposition s = smith_normal_form(relations);
    std::size_t diag = std::min(relations.rows(), relations.cols());
    std::vector<Int> raw_orders(num_gens);
    for (std::size_t k = 0; k < num_gens; ++k)
        raw_orders[k] = k < diag ? s.D.at(k, k) : Int(0);

    std::vector<std::size_t> keep;
    std::vector<Int> orders;
    for (std::size_t k = 0; k < num_gens; ++k)
        if (raw_orders[k] != 1) {
            keep.push_back(k);
            orders.push_back(raw_orders[k]);
        }
    PresentedGroup group(orders);

    IntMatrix uinv = inverse_unimodular(s.U);
    IntMatrix to_canonical(keep.size(), num_gens);
    IntMatrix from_canonical(num_gens, keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < num_gens; ++c) {
            to_canonical.at(r, c) = s.U.at(keep[r], c);
            from_canonical.at(c, r) = uinv.at(c, keep[r]);
        }
    return {group, group.reduce_matrix(to_canonical), from_canonical};
}

SubgroupPresentation subgroup_presentation(const Subgroup& s) {
    const PresentedGroup& amb = s.ambient;
    IntMatrix rel = amb.relation_matrix();
    IntMatrix span = IntMatrix::hstack(s.generators, rel);

    // basis of the preimage lattice <generators> + <relations>
    HermiteDecomposition hd = hermite_normal_form(span.transposed());
    std::vector<std::size_t> nonzero_rows;
    for (std::size_t i = 0; i < hd.H.rows(); ++i)
        for (std::size_t j = 0; j < hd.H.cols(); ++j)
            if (hd.H.at(i, j) != 0) {
                nonzero_rows.push_back(i);
                break;
            }
    IntMatrix basis(amb.rank(), nonzero_rows.size());
    for (std::size_t j = 0; j < nonzero_rows.size(); ++j)
        for (std::size_t i = 0; i < amb.rank(); ++i)
            basis.at(i, j) = hd.H.at(nonzero_rows[j], i);

    // relations of the subgroup = ambient relations written over the basis
    IntMatrix rel_over_basis(basis.cols(), rel.cols());
    for (std::size_t j = 0; j < rel.cols(); ++j) {
        auto x = solve_in_lattice(basis, rel.column(j));
        if (!x)
            throw std::logic_error("subgroup_presentation: relation escaped its own lattice");
        for (std::size_t i = 0; i < basis.cols(); ++i)
            rel_over_basis.at(i, j) = (*x)[i];
    }

    QuotientPresentation qp = present_quotient(basis.cols(), rel_over_basis);
    GroupHom inclusion(qp.group, amb, basis * qp.from_canonical);
    return {qp.group, inclusion};
}

PresentedGroup subgroup_as_group(const Subgroup& s) {
    return subgroup_presentation(s).group;
}

GroupHom corestrict(const GroupHom& f, const SubgroupPresentation& sub) {
    if (sub.inclusion.codomain() != f.codomain())
        throw std::invalid_argument("corestrict: subgroup lives in a different group");
    IntMatrix aug =
        IntMatrix::hstack(sub.inclusion.matrix(), f.codomain().relation_matrix());
    IntMatrix m(sub.group.rank(), f.domain().rank());
    for (std::size_t j = 0; j < f.domain().rank(); ++j) {
        auto x = solve_in_lattice(aug, f.matrix().column(j));
        if (!x)
            throw std::invalid_argument("corestrict: image is not contained in the subgroup");
        for (std::size_t i = 0; i < sub.group.rank(); ++i)
            m.at(i, j) = (*x)[i];
    }
    return GroupHom(f.domain(), sub.group, std::move(m));
}

bool is_isomorphism(const GroupHom& f) {
    if (kernel(f).generators.cols() != 0)
        return false;
    return subgroup_leq(full_subgroup(f.codomain()), image(f));
}

GroupHom inverse_hom(const GroupHom& f) {
    if (!is_isomorphism(f))
        throw std::invalid_argument("inverse_hom: not an isomorphism");
    IntMatrix aug = IntMatrix::hstack(f.matrix(), f.codomain().relation_matrix());
    IntMatrix m(f.domain().rank(), f.codomain().rank());
    for (std::size_t j = 0; j < f.codomain().rank(); ++j) {
        std::vector<Int> e(f.codomain().rank());
        e[j] = 1;
        auto x = solve_in_lattice(aug, e);
        if (!x)
            throw std::logic_error("inverse_hom: surjectivity check lied");
        for (std::size_t i = 0; i < f.domain().rank(); ++i)
            m.at(i, j) = (*x)[i];
    }
    return GroupHom(f.codomain(), f.domain(), std::move(m));
}

std::vector<std::vector<Int>> enumerate_elements(const PresentedGroup& g, const Int& max_size) {
    auto n = g.order();
    if (!n)
        throw std::invalid_argument("enumerate_elements: group is infinite");
    if (*n > max_size)
        throw std::invalid_argument("enumerate_elements: group exceeds the enumeration bound");
    std::vector<std::vector<Int>> out;
    std::vector<Int> x(g.rank());
    for (;;) {
        out.push_back(x);
        std::size_t i = g.rank();
        while (i > 0) {
            --i;
            if (++x[i] < g.orders()[i])
                break;
            x[i] = 0;
            if (i == 0)
                return out;
        }
        if (g.rank() == 0)
            return out;
    }
}

} // namespace crtkit
