#include "crtkit/pconstruct.hpp"

#include <sstream>
#include <utility>

namespace crtkit {

InvolutiveGroup::InvolutiveGroup(PresentedGroup g, GroupHom alpha)
    : group_(std::move(g)), alpha_(std::move(alpha)) {
    if (alpha_.domain() != group_ || alpha_.codomain() != group_)
        throw NotInvolutionError("involution must be an endomorphism of the group");
    if (!(compose(alpha_, alpha_) == GroupHom::identity(group_)))
        throw NotInvolutionError("alpha.alpha is not the identity");
}

InvolutiveGroup InvolutiveGroup::from_raw(const std::vector<Int>& raw_orders,
                                          const IntMatrix& alpha_raw) {
    if (alpha_raw.rows() != raw_orders.size() || alpha_raw.cols() != raw_orders.size())
        throw std::invalid_argument("involution matrix shape does not match the orders list");
    // well-definedness in the raw presentation
    for (std::size_t j = 0; j < raw_orders.size(); ++j) {
        if (raw_orders[j] == 0)
            continue;
        for (std::size_t i = 0; i < raw_orders.size(); ++i) {
            Int v = raw_orders[j] * alpha_raw.at(i, j);
            if (raw_orders[i] == 0 ? v != 0 : v % raw_orders[i] != 0) {
                std::ostringstream os;
                os << "matrix is not a well-defined endomorphism: generator " << j
                   << " of order " << raw_orders[j] << " escapes the relations";
                throw NotInvolutionError(os.str());
            }
        }
    }
    QuotientPresentation qp =
        present_quotient(raw_orders.size(), IntMatrix::diagonal(raw_orders));
    IntMatrix canon = qp.to_canonical * alpha_raw * qp.from_canonical;
    return InvolutiveGroup(qp.group, GroupHom(qp.group, qp.group, std::move(canon)));
}

namespace {

struct AdmissibilityDetail {
    bool plus_side;  // ker(1-alpha) = im(1+alpha)
    bool minus_side; // ker(1+alpha) = im(1-alpha)
};

AdmissibilityDetail admissibility_detail(const InvolutiveGroup& ig) {
    GroupHom id = GroupHom::identity(ig.group());
    GroupHom plus = hom_sum(id, ig.involution());
    GroupHom minus = hom_diff(id, ig.involution());
    Subgroup ker_plus = kernel(plus);
    Subgroup ker_minus = kernel(minus);
    Subgroup im_plus = image(plus);
    Subgroup im_minus = image(minus);
    return {
        subgroup_leq(ker_minus, im_plus) && subgroup_leq(im_plus, ker_minus),
        subgroup_leq(ker_plus, im_minus) && subgroup_leq(im_minus, ker_plus),
    };
}

} // namespace

bool involution_admissible(const InvolutiveGroup& ig) {
    AdmissibilityDetail d = admissibility_detail(ig);
    return d.plus_side && d.minus_side;
}

PolarParts polar_parts(const InvolutiveGroup& ig) {
    AdmissibilityDetail d = admissibility_detail(ig);
    if (!d.minus_side)
        throw InadmissibleInvolutionError("ker(1+alpha) != image(1-alpha)");
    if (!d.plus_side)
        throw InadmissibleInvolutionError("ker(1-alpha) != image(1+alpha)");

    GroupHom id = GroupHom::identity(ig.group());
    GroupHom plus_map = hom_sum(id, ig.involution());
    GroupHom minus_map = hom_diff(id, ig.involution());

    SubgroupPresentation plus_pres = subgroup_presentation(kernel(minus_map));
    SubgroupPresentation minus_pres = subgroup_presentation(kernel(plus_map));

    PolarParts parts{
        {plus_pres.group, plus_pres.inclusion, corestrict(plus_map, plus_pres)},
        {minus_pres.group, minus_pres.inclusion, corestrict(minus_map, minus_pres)},
    };

    // 0 -> G+ -> G -> G- -> 0 and 0 -> G- -> G -> G+ -> 0
    auto check = [](const HalfPart& in, const HalfPart& out) {
        return kernel(in.inclusion).generators.cols() == 0 &&
               exact_at(in.inclusion, out.projection) == Exactness::Exact &&
               exact_at(out.projection, GroupHom::zero(out.part, PresentedGroup{})) ==
                   Exactness::Exact;
    };
    if (!check(parts.plus, parts.minus) || !check(parts.minus, parts.plus))
        throw std::logic_error("polar_parts: short exact sequence verification failed");
    return parts;
}

HalfPart plus_part(const InvolutiveGroup& ig) { return polar_parts(ig).plus; }
HalfPart minus_part(const InvolutiveGroup& ig) { return polar_parts(ig).minus; }

namespace {

enum class Slot { Plus, Minus, Full, Zero };

constexpr std::array<Slot, 9> kRowO = {Slot::Plus, Slot::Zero, Slot::Minus, Slot::Zero,
                                       Slot::Plus, Slot::Zero, Slot::Minus, Slot::Zero,
                                       Slot::Plus};
constexpr std::array<Slot, 9> kRowU = {Slot::Full, Slot::Zero, Slot::Full, Slot::Zero,
                                       Slot::Full, Slot::Zero, Slot::Full, Slot::Zero,
                                       Slot::Full};
constexpr std::array<Slot, 9> kRowT = {Slot::Plus, Slot::Minus, Slot::Minus, Slot::Plus,
                                       Slot::Plus, Slot::Minus, Slot::Minus, Slot::Plus,
                                       Slot::Plus};

} // namespace

CRTModule build_p(const InvolutiveGroup& ig) {
    PolarParts pp = polar_parts(ig);
    const PresentedGroup& g = ig.group();
    const PresentedGroup trivial;

    // The table is displayed in degrees 0..8; mod-8 storage requires its
    // ninth column to repeat the first.
    static_assert(kRowO[8] == kRowO[0]);
    static_assert(kRowU[8] == kRowU[0]);
    static_assert(kRowT[8] == kRowT[0]);

    auto pick = [&](Slot s) -> const PresentedGroup& {
        switch (s) {
        case Slot::Plus:
            return pp.plus.part;
        case Slot::Minus:
            return pp.minus.part;
        case Slot::Full:
            return g;
        case Slot::Zero:
            return trivial;
        }
        throw std::logic_error("unknown slot");
    };

    CRTModule m;
    for (int n = 0; n < 8; ++n) {
        m.o[n] = pick(kRowO[n]);
        m.u[n] = pick(kRowU[n]);
        m.t[n] = pick(kRowT[n]);
    }

    auto zero = [&](const PresentedGroup& cod, const PresentedGroup& dom) {
        return IntMatrix(cod.rank(), dom.rank());
    };
    const IntMatrix& inc_plus = pp.plus.inclusion.matrix();
    const IntMatrix& inc_minus = pp.minus.inclusion.matrix();
    const IntMatrix& proj_plus = pp.plus.projection.matrix();
    const IntMatrix& proj_minus = pp.minus.projection.matrix();

    for (int n = 0; n < 8; ++n) {
        bool plus_slot = n % 4 == 0;
        if (n % 2 == 0) {
            m.c[n] = plus_slot ? inc_plus : inc_minus;
            m.r[n] = plus_slot ? proj_plus : proj_minus;
            m.zeta[n] = plus_slot ? inc_plus : inc_minus;
            m.gamma[n] = plus_slot ? proj_plus : proj_minus;
            m.eps[n] = IntMatrix::identity(m.o[n].rank());
            m.psi_u[n] = g.reduce_matrix(plus_slot ? ig.involution().matrix()
                                                   : ig.involution().matrix().scaled(-1));
            m.tau[n] = zero(m.group(Part::O, n + 1), m.t[n]);
        } else {
            m.c[n] = zero(m.u[n], m.o[n]);
            m.r[n] = zero(m.o[n], m.u[n]);
            m.zeta[n] = zero(m.u[n], m.t[n]);
            m.gamma[n] = zero(m.group(Part::T, n - 1), m.u[n]);
            m.eps[n] = zero(m.t[n], m.o[n]);
            m.psi_u[n] = IntMatrix(0, 0);
            m.tau[n] = IntMatrix::identity(m.t[n].rank());
        }
        m.psi_t[n] = m.t[n].reduce_matrix(
            IntMatrix::identity(m.t[n].rank()).scaled(n % 2 == 0 ? 1 : -1));
        m.eta_o[n] = zero(m.group(Part::O, n + 1), m.o[n]);
        m.beta_u[n] = n % 2 == 0 ? IntMatrix::identity(g.rank()) : IntMatrix(0, 0);
        m.beta_t[n] = IntMatrix::identity(m.t[n].rank());
    }
    // xi is not displayed in the table; it is forced by xi = r.betaU^2.c
    for (int n = 0; n < 8; ++n)
        m.xi[n] = m.group(Part::O, n + 4)
                      .reduce_matrix(m.matrix(MapFamily::R, n + 4) *
                                     m.matrix(MapFamily::BetaU, n + 2) *
                                     m.matrix(MapFamily::BetaU, n) * m.c[n]);
    return m;
}

InvolutiveGroup builtin_example(const std::string& name) {
    if (name == "G-alpha") {
        // Z2^4 with the block swap (1 2)(3 4)
        return InvolutiveGroup::from_raw(
            {2, 2, 2, 2},
            IntMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
    }
    if (name == "H-beta") {
        // Z4 + Z2 + Z2 (in that generator order) with a unipotent involution;
        // the entry 2 in position (1,3) lives mod 4 in the first coordinate
        return InvolutiveGroup::from_raw(
            {4, 2, 2}, IntMatrix::from_rows({{1, 0, 2}, {1, 1, 0}, {0, 0, 1}}));
    }
    throw std::invalid_argument("unknown builtin example: " + name);
}

TheoremDemo demo_theorem(const InvolutiveGroup& a, const InvolutiveGroup& b) {
    CRTModule ma = build_p(a);
    CRTModule mb = build_p(b);

    TheoremDemo demo;
    demo.report_a = check_crt_relations(ma, true);
    demo.report_a.merge(check_acyclicity(ma));
    demo.report_b = check_crt_relations(mb, true);
    demo.report_b.merge(check_acyclicity(mb));
    demo.fp_a = fingerprint(ma);
    demo.fp_b = fingerprint(mb);
    demo.o_parts_agree = demo.fp_a.o == demo.fp_b.o;

    auto actions_zero = [](const CRTModule& m) {
        for (int n = 0; n < 8; ++n)
            if (!module_hom(m, MapFamily::EtaO, n).is_zero() ||
                !module_hom(m, MapFamily::Xi, n).is_zero())
                return false;
        return true;
    };
    demo.o_actions_zero_a = actions_zero(ma);
    demo.o_actions_zero_b = actions_zero(mb);

    for (int n = 0; n < 8; ++n)
        if (demo.fp_a.u[n] != demo.fp_b.u[n]) {
            demo.u_parts_differ = true;
            demo.u_first_diff_degree = n;
            break;
        }
    return demo;
}

} // namespace crtkit
