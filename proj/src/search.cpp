#include "crtkit/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crtkit {

namespace {

// Canonical orders lists (divisor chains d1 | d2 | ...) with product bound.
void collect_chains(long long bound, long long last, std::vector<Int>& cur,
                    std::vector<std::vector<Int>>& out) {
    out.push_back(cur);
    for (long long d = std::max(last, 2ll); d <= bound; ++d) {
        if (last >= 2 && d % last != 0)
            continue;
        cur.push_back(d);
        collect_chains(bound / d, d, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Int>> group_orders_up_to(long long max_order) {
    std::vector<Int> cur;
    std::vector<std::vector<Int>> out;
    collect_chains(max_order, 1, cur, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        Int pa = 1, pb = 1;
        for (const Int& d : a)
            pa *= d;
        for (const Int& d : b)
            pb *= d;
        if (pa != pb)
            return pa < pb;
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

// Allowed images of a generator of order d: entry i ranges over multiples of
// e_i / gcd(e_i, d), so the candidate count for one column is prod gcd(e_i, d).
struct ColumnSpace {
    std::vector<Int> step;  // increment per coordinate
    std::vector<Int> count; // choices per coordinate
};

ColumnSpace column_space(const PresentedGroup& g, const Int& d) {
    ColumnSpace cs;
    for (const Int& e : g.orders()) {
        Int gcd = boost::multiprecision::gcd(e, d);
        cs.step.push_back(e / gcd);
        cs.count.push_back(gcd);
    }
    return cs;
}

unsigned long long endo_candidate_count(const PresentedGroup& g,
                                        unsigned long long budget) {
    unsigned long long total = 1;
    for (const Int& d : g.orders()) {
        ColumnSpace cs = column_space(g, d);
        for (const Int& c : cs.count) {
            total *= static_cast<unsigned long long>(c);
            if (total > budget)
                return total;
        }
    }
    return total;
}

// Visit every well-defined endomorphism matrix of g in lexicographic order.
template <typename Visit>
void for_each_endo(const PresentedGroup& g, Visit&& visit) {
    std::size_t k = g.rank();
    std::vector<ColumnSpace> spaces;
    for (const Int& d : g.orders())
        spaces.push_back(column_space(g, d));

    IntMatrix m(k, k);
    std::vector<std::vector<Int>> digits(k, std::vector<Int>(k, 0));
    for (;;) {
        visit(m);
        // odometer over (column, coordinate), last coordinate fastest
        bool carried = false;
        for (std::size_t cj = k; cj-- > 0 && !carried;)
            for (std::size_t ci = k; ci-- > 0;) {
                if (digits[cj][ci] + 1 < spaces[cj].count[ci]) {
                    ++digits[cj][ci];
                    m.at(ci, cj) = digits[cj][ci] * spaces[cj].step[ci];
                    carried = true;
                    break;
                }
                digits[cj][ci] = 0;
                m.at(ci, cj) = 0;
            }
        if (!carried)
            return;
    }
}

bool surjective_endo(const PresentedGroup& g, const IntMatrix& m) {
    SmithDecomposition s =
        smith_normal_form(IntMatrix::hstack(m, g.relation_matrix()));
    for (std::size_t i = 0; i < g.rank(); ++i)
        if (s.D.at(i, i) != 1)
            return false;
    return true;
}

std::string matrix_key(const IntMatrix& m) { return m.to_string(); }

std::string fingerprint_part_key(const std::array<std::vector<Int>, 8>& slots) {
    std::ostringstream os;
    for (const auto& orders : slots) {
        os << "(";
        for (const Int& d : orders)
            os << d << ",";
        os << ")";
    }
    return os.str();
}

} // namespace

SearchReport search_counterexamples(const SearchOptions& opts) {
    if (opts.max_order < 1 || opts.max_order > 64)
        throw std::invalid_argument("search: max order must be between 1 and 64");

    SearchReport report;
    report.max_order = opts.max_order;
    report.bucket_part = opts.bucket_part;

    std::map<std::string, SearchBucket> buckets;

    for (const auto& orders : group_orders_up_to(opts.max_order)) {
        ++report.groups_enumerated;
        PresentedGroup g(orders);
        if (g.orders() != orders)
            throw std::logic_error("search: generated a non-canonical chain");

        if (endo_candidate_count(g, opts.enumeration_budget) > opts.enumeration_budget) {
            report.skipped_groups.push_back(orders);
            continue;
        }

        // involutions, in lexicographic matrix order
        std::vector<IntMatrix> admissible;
        GroupHom identity = GroupHom::identity(g);
        for_each_endo(g, [&](const IntMatrix& m) {
            GroupHom h(g, g, m);
            if (!(compose(h, h) == identity))
                return;
            if (involution_admissible(InvolutiveGroup(g, h)))
                admissible.push_back(h.matrix());
        });

        // conjugacy dedup: walk in lex order, mark each class's full orbit
        std::vector<IntMatrix> reps;
        if (admissible.size() <= 1) {
            reps = admissible;
        } else {
            std::vector<std::pair<IntMatrix, IntMatrix>> auts; // (sigma, sigma^-1)
            for_each_endo(g, [&](const IntMatrix& m) {
                if (surjective_endo(g, m)) {
                    GroupHom h(g, g, m);
                    auts.emplace_back(h.matrix(), inverse_hom(h).matrix());
                }
            });
            std::set<std::string> seen;
            for (const IntMatrix& alpha : admissible) {
                if (seen.count(matrix_key(alpha)))
                    continue;
                reps.push_back(alpha);
                for (const auto& [sigma, sigma_inv] : auts)
                    seen.insert(matrix_key(g.reduce_matrix(sigma * alpha * sigma_inv)));
            }
        }

        for (const IntMatrix& alpha : reps) {
            ++report.classes_admissible;
            InvolutiveGroup ig(g, GroupHom(g, g, alpha));
            Fingerprint fp = fingerprint(build_p(ig));
            std::string key = fingerprint_part_key(fp.part(opts.bucket_part));
            SearchBucket& bucket = buckets[key];
            bucket.key = fp.part(opts.bucket_part);
            bucket.entries.push_back({orders, alpha, fp});
        }
    }

    for (auto& [key, bucket] : buckets) {
        std::set<std::string> complements;
        for (const auto& entry : bucket.entries) {
            std::string comp;
            for (Part p : {Part::O, Part::U, Part::T})
                if (p != opts.bucket_part)
                    comp += fingerprint_part_key(entry.fp.part(p));
            complements.insert(comp);
        }
        bucket.distinct_complements = complements.size();
        if (bucket.distinct_complements >= 2)
            report.buckets.push_back(bucket);
    }
    return report;
}

} // namespace crtkit
