#include "crtkit/cli.hpp"

#include "crtkit/document.hpp"
#include "crtkit/pconstruct.hpp"
#include "crtkit/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace crtkit::cli {

namespace {

using nlohmann::ordered_json;

std::string orders_name(const std::vector<Int>& orders) {
    return group_name(PresentedGroup(orders));
}

std::string fingerprint_row(const std::array<std::vector<Int>, 8>& slots) {
    std::string s = "[";
    for (int n = 0; n < 8; ++n) {
        if (n)
            s += ", ";
        s += orders_name(slots[n]);
    }
    return s + "]";
}

ordered_json orders_json(const std::vector<Int>& orders) {
    ordered_json arr = ordered_json::array();
    for (const Int& d : orders)
        arr.push_back(d.convert_to<long long>());
    return arr;
}

ordered_json fingerprint_json(const Fingerprint& fp) {
    ordered_json j;
    for (Part p : {Part::O, Part::U, Part::T}) {
        ordered_json arr = ordered_json::array();
        for (int n = 0; n < 8; ++n)
            arr.push_back(orders_json(fp.part(p)[n]));
        j[part_name(p)] = std::move(arr);
    }
    return j;
}

ordered_json report_json(const ViolationReport& report) {
    ordered_json j;
    j["pass"] = report.empty();
    ordered_json structure = ordered_json::array();
    for (const auto& v : report.structure)
        structure.push_back({{"family", v.family}, {"degree", v.degree}, {"what", v.what}});
    ordered_json relations = ordered_json::array();
    for (const auto& v : report.relations)
        relations.push_back({{"id", v.relation_id},
                             {"degree", v.degree},
                             {"statement", relation_statement(v.relation_id)},
                             {"lhs", v.lhs.to_string()},
                             {"rhs", v.rhs.to_string()}});
    ordered_json exactness = ordered_json::array();
    for (const auto& v : report.exactness)
        exactness.push_back({{"sequence", v.sequence_id},
                             {"node", v.node},
                             {"degree", v.degree},
                             {"verdict", to_string(v.verdict)}});
    j["structure"] = std::move(structure);
    j["relations"] = std::move(relations);
    j["exactness"] = std::move(exactness);
    return j;
}

void print_report_text(const ViolationReport& report, std::ostream& out) {
    for (const auto& v : report.structure)
        out << "  [structure] " << v.family << "[" << v.degree << "]: " << v.what << "\n";
    for (const auto& v : report.relations) {
        out << "  [relation] " << v.relation_id << " at degree " << v.degree << ": "
            << relation_statement(v.relation_id) << "\n";
        out << "    lhs = " << v.lhs.to_string() << "\n";
        out << "    rhs = " << v.rhs.to_string() << "\n";
    }
    for (const auto& v : report.exactness)
        out << "  [exactness] sequence " << v.sequence_id << " at degree " << v.degree << ", "
            << v.node << ": " << to_string(v.verdict) << "\n";
}

void print_fingerprint_table(const Fingerprint& fp, std::ostream& out) {
    std::array<std::array<std::string, 8>, 3> cells;
    std::array<std::size_t, 8> width{};
    int pi = 0;
    for (Part p : {Part::O, Part::U, Part::T}) {
        for (int n = 0; n < 8; ++n) {
            cells[pi][n] = orders_name(fp.part(p)[n]);
            width[n] = std::max(width[n], cells[pi][n].size());
        }
        ++pi;
    }
    out << "part";
    for (int n = 0; n < 8; ++n)
        out << "  " << std::setw(static_cast<int>(width[n])) << std::left << n;
    out << "\n";
    pi = 0;
    for (Part p : {Part::O, Part::U, Part::T}) {
        out << part_name(p) << "   ";
        for (int n = 0; n < 8; ++n)
            out << "  " << std::setw(static_cast<int>(width[n])) << std::left << cells[pi][n];
        out << "\n";
        ++pi;
    }
}

ViolationReport full_verification(const CRTModule& m, bool strict) {
    ViolationReport report = validate_structure(m);
    if (!report.empty())
        return report;
    report.merge(check_crt_relations(m, strict));
    report.merge(check_acyclicity(m));
    return report;
}

int cmd_verify(const std::string& path, bool strict, const std::string& format,
               std::ostream& out) {
    ModuleDocument doc = load_module_document(path);
    ViolationReport report = full_verification(doc.module, strict);
    if (format == "json") {
        ordered_json j = report_json(report);
        j["path"] = path;
        j["strict"] = strict;
        out << j.dump(1) << "\n";
    } else {
        out << "verify: " << path << (strict ? " (strict)" : " (no-strict)") << "\n";
        print_report_text(report, out);
        out << "structure: " << report.structure.size() << " violation(s), relations: "
            << report.relations.size() << " violation(s), exactness: "
            << report.exactness.size() << " failure(s)\n";
        out << "verdict: " << (report.empty() ? "PASS" : "FAIL") << "\n";
    }
    return report.empty() ? kExitPass : kExitFail;
}

int cmd_fingerprint(const std::string& path, const std::string& format, std::ostream& out) {
    ModuleDocument doc = load_module_document(path);
    Fingerprint fp = fingerprint(doc.module);
    if (format == "json") {
        out << fingerprint_json(fp).dump(1) << "\n";
    } else {
        out << "fingerprint: " << path << "\n";
        print_fingerprint_table(fp, out);
    }
    return kExitPass;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& format, std::ostream& out) {
    ModuleDocument a = load_module_document(path_a);
    ModuleDocument b = load_module_document(path_b);
    Fingerprint fa = fingerprint(a.module);
    Fingerprint fb = fingerprint(b.module);
    ComparisonVerdict v = compare(a.module, b.module);

    if (format == "json") {
        ordered_json j;
        j["left"] = path_a;
        j["right"] = path_b;
        j["left_fingerprint"] = fingerprint_json(fa);
        j["right_fingerprint"] = fingerprint_json(fb);
        for (Part p : {Part::O, Part::U, Part::T}) {
            const PartComparison& pc = v.part(p);
            ordered_json pj;
            pj["agree"] = pc.agree;
            if (!pc.agree) {
                pj["first_diff_degree"] = pc.first_diff_degree;
                pj["left_orders"] = orders_json(pc.lhs_orders);
                pj["right_orders"] = orders_json(pc.rhs_orders);
            }
            j[std::string("part_") + part_name(p)] = std::move(pj);
        }
        j["distinguishable"] = v.distinguishable();
        out << j.dump(1) << "\n";
    } else {
        out << "compare: " << path_a << " vs " << path_b << "\n";
        out << "part degree  left : right\n";
        for (Part p : {Part::O, Part::U, Part::T})
            for (int n = 0; n < 8; ++n)
                out << part_name(p) << "    " << n << "       "
                    << orders_name(fa.part(p)[n]) << " : " << orders_name(fb.part(p)[n])
                    << (fa.part(p)[n] == fb.part(p)[n] ? "" : "   <- differs") << "\n";
        for (Part p : {Part::O, Part::U, Part::T}) {
            const PartComparison& pc = v.part(p);
            if (pc.agree)
                out << part_name(p) << ": degreewise isomorphic\n";
            else
                out << part_name(p) << ": differs first at degree " << pc.first_diff_degree
                    << " (" << orders_name(pc.lhs_orders) << " vs "
                    << orders_name(pc.rhs_orders) << ")\n";
        }
        if (v.distinguishable())
            out << "verdict: CRT-distinguishable\n";
        else
            out << "verdict: not distinguished by fingerprint (fingerprint equality is "
                   "necessary, not sufficient, for CRT-isomorphism)\n";
    }
    return v.distinguishable() ? kExitFail : kExitPass;
}

int cmd_demo(const std::string& name, const std::string& format, std::ostream& out,
             std::ostream& err) {
    if (name != "5.1") {
        err << "unknown demo: " << name << " (available: 5.1)\n";
        return kExitParseError;
    }
    TheoremDemo demo = demo_theorem(builtin_example("G-alpha"), builtin_example("H-beta"));
    if (format == "json") {
        ordered_json j;
        j["demo"] = name;
        j["P(G-alpha)"] = report_json(demo.report_a);
        j["P(H-beta)"] = report_json(demo.report_b);
        j["fingerprint_G"] = fingerprint_json(demo.fp_a);
        j["fingerprint_H"] = fingerprint_json(demo.fp_b);
        j["o_parts_agree"] = demo.o_parts_agree;
        j["o_actions_zero"] = demo.o_actions_zero_a && demo.o_actions_zero_b;
        j["u_parts_differ"] = demo.u_parts_differ;
        if (demo.u_parts_differ)
            j["u_first_diff_degree"] = demo.u_first_diff_degree;
        j["pass"] = demo.passes();
        out << j.dump(1) << "\n";
    } else {
        out << "demo 5.1: united K-theory separates what real K-theory cannot\n";
        out << "P(G-alpha) with G = Z2xZ2xZ2xZ2: "
            << (demo.report_a.empty() ? "PASS" : "FAIL")
            << " (structure, strict relations, acyclicity)\n";
        print_report_text(demo.report_a, out);
        out << "P(H-beta) with H = Z2xZ2xZ4: " << (demo.report_b.empty() ? "PASS" : "FAIL")
            << " (structure, strict relations, acyclicity)\n";
        print_report_text(demo.report_b, out);
        out << "O parts: "
            << (demo.o_parts_agree ? "agree in all 8 degrees" : "DIFFER (unexpected)") << "\n";
        out << "O actions (etaO, xi): "
            << (demo.o_actions_zero_a && demo.o_actions_zero_b
                    ? "all zero on both modules, degreewise equal"
                    : "DIFFER (unexpected)")
            << "\n";
        if (demo.u_parts_differ)
            out << "U parts: differ at degree " << demo.u_first_diff_degree << ": "
                << orders_name(demo.fp_a.u[demo.u_first_diff_degree]) << " vs "
                << orders_name(demo.fp_b.u[demo.u_first_diff_degree]) << "\n";
        else
            out << "U parts: agree (unexpected)\n";
        out << "verdict: " << (demo.passes() ? "PASS" : "FAIL") << "\n";
    }
    return demo.passes() ? kExitPass : kExitFail;
}

int cmd_search(long long max_order, const std::string& part, const std::string& format,
               std::ostream& out) {
    SearchOptions opts;
    opts.max_order = max_order;
    opts.bucket_part = part == "U" ? Part::U : part == "T" ? Part::T : Part::O;
    SearchReport report = search_counterexamples(opts);

    if (format == "json") {
        ordered_json j;
        j["max_order"] = report.max_order;
        j["bucket_part"] = part_name(report.bucket_part);
        j["groups_enumerated"] = report.groups_enumerated;
        j["admissible_classes"] = report.classes_admissible;
        ordered_json skipped = ordered_json::array();
        for (const auto& orders : report.skipped_groups)
            skipped.push_back(orders_json(orders));
        j["skipped_groups"] = std::move(skipped);
        ordered_json buckets = ordered_json::array();
        for (const auto& bucket : report.buckets) {
            ordered_json bj;
            ordered_json key = ordered_json::array();
            for (const auto& orders : bucket.key)
                key.push_back(orders_json(orders));
            bj["key"] = std::move(key);
            bj["distinct_complements"] = bucket.distinct_complements;
            ordered_json entries = ordered_json::array();
            for (const auto& e : bucket.entries)
                entries.push_back({{"group", orders_json(e.group_orders)},
                                   {"involution", e.involution.to_string()},
                                   {"fingerprint", fingerprint_json(e.fp)}});
            bj["entries"] = std::move(entries);
            buckets.push_back(std::move(bj));
        }
        j["buckets"] = std::move(buckets);
        out << j.dump(1) << "\n";
    } else {
        out << "search: max order " << report.max_order << ", bucketing by "
            << part_name(report.bucket_part) << "-fingerprint\n";
        out << "groups enumerated: " << report.groups_enumerated
            << ", admissible involution classes: " << report.classes_admissible << "\n";
        if (!report.skipped_groups.empty()) {
            out << "skipped (enumeration over budget):";
            for (const auto& orders : report.skipped_groups)
                out << " " << orders_name(orders);
            out << "\n";
        }
        out << "buckets with >= 2 distinct complementary fingerprints: "
            << report.buckets.size() << "\n";
        for (const auto& bucket : report.buckets) {
            out << "\nbucket " << part_name(report.bucket_part) << "-fingerprint "
                << fingerprint_row(bucket.key) << " (" << bucket.distinct_complements
                << " distinct complements)\n";
            for (const auto& e : bucket.entries) {
                out << "  group " << orders_name(e.group_orders) << ", involution "
                    << e.involution.to_string();
                for (Part p : {Part::O, Part::U, Part::T})
                    if (p != report.bucket_part)
                        out << ", " << part_name(p) << " " << fingerprint_row(e.fp.part(p));
                out << "\n";
            }
        }
    }
    return kExitPass;
}

std::vector<Int> parse_orders_arg(const std::string& s) {
    std::vector<Int> orders;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        long long v = std::stoll(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
            ++pos;
        if (pos != item.size() || v < 0)
            throw ParseError("bad orders list: " + s);
        orders.emplace_back(v);
    }
    if (orders.empty())
        throw ParseError("empty orders list");
    return orders;
}

IntMatrix parse_matrix_arg(const std::string& s) {
    std::vector<std::vector<Int>> rows;
    std::istringstream is(s);
    std::string row;
    while (std::getline(is, row, ';')) {
        std::vector<Int> entries;
        std::istringstream ris(row);
        std::string item;
        while (std::getline(ris, item, ',')) {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
                ++pos;
            if (pos != item.size())
                throw ParseError("bad matrix entry: " + item);
            entries.emplace_back(v);
        }
        if (!rows.empty() && entries.size() != rows[0].size())
            throw ParseError("ragged matrix rows: " + s);
        rows.push_back(std::move(entries));
    }
    if (rows.empty())
        throw ParseError("empty matrix");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

int cmd_build_p(const std::string& orders_str, const std::string& involution_str,
                const std::string& out_path, const std::string& name, std::ostream& out,
                std::ostream& err) {
    std::vector<Int> orders = parse_orders_arg(orders_str);
    IntMatrix alpha = parse_matrix_arg(involution_str);
    if (alpha.rows() != orders.size() || alpha.cols() != orders.size())
        throw ParseError("involution matrix shape does not match the orders list");

    InvolutiveGroup ig = [&] {
        try {
            return InvolutiveGroup::from_raw(orders, alpha);
        } catch (const NotInvolutionError& e) {
            err << "not an involution: " << e.what() << "\n";
            throw;
        }
    }();

    PolarParts parts = [&] {
        try {
            return polar_parts(ig);
        } catch (const InadmissibleInvolutionError& e) {
            err << "inadmissible involution: " << e.what() << "\n";
            throw;
        }
    }();

    CRTModule m = build_p(ig);
    ModuleDocument doc;
    doc.module = m;
    if (!name.empty())
        doc.name = name;
    save_module_document(doc, out_path);
    out << "G  = " << group_name(ig.group()) << "\n";
    out << "G+ = " << group_name(parts.plus.part) << "\n";
    out << "G- = " << group_name(parts.minus.part) << "\n";
    out << "wrote " << out_path << "\n";
    return kExitPass;
}

int cmd_shift(const std::string& path, int k, const std::string& out_path,
              std::ostream& out) {
    ModuleDocument doc = load_module_document(path);
    doc.module = shift(doc.module, k);
    save_module_document(doc, out_path);
    out << "wrote " << out_path << "\n";
    return kExitPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact CRT-module verifier and toolkit"};
    app.require_subcommand(1);
    int code = kExitPass;

    auto add_format = [](CLI::App* cmd, std::string& format) {
        cmd->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"text", "json"}))
            ->default_val("text");
    };

    std::string verify_path, verify_format;
    bool verify_strict = true;
    auto* verify = app.add_subcommand("verify", "check structure, relations, and acyclicity");
    verify->add_option("path", verify_path, "module document")->required();
    verify->add_flag("--strict,!--no-strict", verify_strict,
                     "also check coefficient-forced identities (default on)");
    add_format(verify, verify_format);
    verify->callback([&] { code = cmd_verify(verify_path, verify_strict, verify_format, out); });

    std::string fp_path, fp_format;
    auto* fp = app.add_subcommand("fingerprint", "print the per-part, per-degree orders table");
    fp->add_option("path", fp_path, "module document")->required();
    add_format(fp, fp_format);
    fp->callback([&] { code = cmd_fingerprint(fp_path, fp_format, out); });

    std::string cmp_a, cmp_b, cmp_format;
    auto* cmp = app.add_subcommand("compare", "compare two module fingerprints");
    cmp->add_option("left", cmp_a, "module document")->required();
    cmp->add_option("right", cmp_b, "module document")->required();
    add_format(cmp, cmp_format);
    cmp->callback([&] { code = cmd_compare(cmp_a, cmp_b, cmp_format, out); });

    std::string demo_name = "5.1", demo_format;
    auto* demo = app.add_subcommand("demo", "reproduce the distinguishing example");
    demo->add_option("name", demo_name, "demo name (default 5.1)");
    add_format(demo, demo_format);
    demo->callback([&] { code = cmd_demo(demo_name, demo_format, out, err); });

    long long search_max = 16;
    std::string search_part = "O", search_format;
    auto* search = app.add_subcommand("search", "hunt for fingerprint-collision buckets");
    search->add_option("--max-order", search_max, "group order bound (<= 64)")->required();
    search->add_option("--part", search_part, "bucketing part")
        ->check(CLI::IsMember({"O", "U", "T"}))
        ->default_val("O");
    add_format(search, search_format);
    search->callback([&] { code = cmd_search(search_max, search_part, search_format, out); });

    std::string bp_orders, bp_matrix, bp_out, bp_name;
    auto* bp = app.add_subcommand("build-p", "build the module of a group with involution");
    bp->add_option("--orders", bp_orders, "comma-separated group orders, e.g. 2,2,2,2")
        ->required();
    bp->add_option("--involution", bp_matrix,
                   "involution matrix, rows separated by ';', e.g. 0,1;1,0")
        ->required();
    bp->add_option("-o,--output", bp_out, "output document path")->required();
    bp->add_option("--name", bp_name, "document name");
    bp->callback([&] { code = cmd_build_p(bp_orders, bp_matrix, bp_out, bp_name, out, err); });

    std::string shift_path, shift_out;
    int shift_k = 0;
    auto* shift_cmd = app.add_subcommand("shift", "reindex a module by a degree shift");
    shift_cmd->add_option("path", shift_path, "module document")->required();
    shift_cmd->add_option("-k,--by", shift_k, "shift amount")->required();
    shift_cmd->add_option("-o,--output", shift_out, "output document path")->required();
    shift_cmd->callback([&] { code = cmd_shift(shift_path, shift_k, shift_out, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kExitPass : kExitParseError;
    } catch (const NotInvolutionError&) {
        return kExitNotInvolution;
    } catch (const InadmissibleInvolutionError&) {
        return kExitInadmissible;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return code;
}

} // namespace crtkit::cli
