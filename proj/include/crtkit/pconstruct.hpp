#pragma once

#include "crtkit/crt_module.hpp"

#include <stdexcept>
#include <string>

namespace crtkit {

struct NotInvolutionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InadmissibleInvolutionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A group together with an involution, in canonical coordinates.
class InvolutiveGroup {
  public:
    // alpha must be an endomorphism of g with alpha . alpha = 1; throws
    // NotInvolutionError otherwise.
    InvolutiveGroup(PresentedGroup g, GroupHom alpha);

    // Accepts the group in any presentation (orders need not be in
    // invariant-factor form) with the involution matrix written in those raw
    // coordinates; canonicalizes and transports.
    static InvolutiveGroup from_raw(const std::vector<Int>& raw_orders,
                                    const IntMatrix& alpha_raw);

    const PresentedGroup& group() const { return group_; }
    const GroupHom& involution() const { return alpha_; }

  private:
    PresentedGroup group_;
    GroupHom alpha_;
};

// ker(1+alpha) = im(1-alpha) and ker(1-alpha) = im(1+alpha).
bool involution_admissible(const InvolutiveGroup& ig);

// One of the two polar pieces: the fixed part G+ = ker(1-alpha) with the
// inclusion i+ and the corestricted projection pi+ = 1 + alpha (resp. G-,
// i-, pi- = 1 - alpha).
struct HalfPart {
    PresentedGroup part;
    GroupHom inclusion;  // part -> G
    GroupHom projection; // G -> part
};

struct PolarParts {
    HalfPart plus;
    HalfPart minus;
};

// Throws InadmissibleInvolutionError (naming the failing equality) unless
// admissible; the two sequences 0 -> G+ -> G -> G- -> 0 and
// 0 -> G- -> G -> G+ -> 0 are verified exact before returning.
PolarParts polar_parts(const InvolutiveGroup& ig);
HalfPart plus_part(const InvolutiveGroup& ig);
HalfPart minus_part(const InvolutiveGroup& ig);

// The acyclic module over the Z/8 grading:
//   O = (G+, 0, G-, 0, ...),  U = (G, 0, G, 0, ...),  T = (G+, G-, G-, G+, ...)
// with c/zeta the inclusions, r/gamma the projections, psiU = +-alpha,
// psiT = (-1)^n, tau the identity at odd degrees, eps the identity at even
// degrees, etaO = 0, beta maps the identity, and xi forced by xi = r.betaU^2.c.
CRTModule build_p(const InvolutiveGroup& ig);

// The two fixtures: "G-alpha" = (Z2^4, block swap) and
// "H-beta" = (Z4+Z2+Z2, unipotent involution).
InvolutiveGroup builtin_example(const std::string& name);

// The comparison backing the headline example: both modules verify, the real
// parts agree (with identically zero etaO and xi actions), the complex parts
// do not.
struct TheoremDemo {
    ViolationReport report_a;
    ViolationReport report_b;
    Fingerprint fp_a;
    Fingerprint fp_b;
    bool o_parts_agree = false;
    bool o_actions_zero_a = false; // etaO and xi families all zero
    bool o_actions_zero_b = false;
    bool u_parts_differ = false;
    int u_first_diff_degree = -1;

    bool passes() const {
        return report_a.empty() && report_b.empty() && o_parts_agree && o_actions_zero_a &&
               o_actions_zero_b && u_parts_differ;
    }
};

TheoremDemo demo_theorem(const InvolutiveGroup& a, const InvolutiveGroup& b);

} // namespace crtkit
