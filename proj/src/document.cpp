#include "crtkit/document.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace crtkit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

long long require_i64(const json& j, const std::string& where) {
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
        fail(where, "integer exceeds the 64-bit document range");
    if (!j.is_number_integer())
        fail(where, "expected a 64-bit integer");
    return j.get<long long>();
}

std::vector<Int> parse_orders(const json& j, const std::string& where) {
    if (!j.is_array())
        fail(where, "expected an orders list");
    std::vector<Int> orders;
    for (std::size_t i = 0; i < j.size(); ++i) {
        long long v = require_i64(j[i], where + "[" + std::to_string(i) + "]");
        if (v < 0)
            fail(where, "orders must be nonnegative");
        orders.emplace_back(v);
    }
    // documents carry groups in invariant-factor form only; accepting other
    // presentations would silently reinterpret the map matrices
    PresentedGroup g(orders);
    if (g.orders() != orders)
        fail(where, "orders list is not in invariant-factor form");
    return orders;
}

IntMatrix parse_matrix(const json& j, std::size_t rows, std::size_t cols,
                       const std::string& where) {
    if (!j.is_array())
        fail(where, "expected a matrix (array of rows)");
    if (j.empty()) {
        if (rows == 0 || cols == 0)
            return IntMatrix(rows, cols);
        return IntMatrix(0, cols); // wrong shape; validate_structure reports it
    }
    IntMatrix m(j.size(), j[0].is_array() ? j[0].size() : 0);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& row = j[i];
        std::string row_where = where + "[" + std::to_string(i) + "]";
        if (!row.is_array())
            fail(row_where, "expected a row of integers");
        if (row.size() != m.cols())
            fail(row_where, "ragged matrix rows");
        for (std::size_t k = 0; k < row.size(); ++k)
            m.at(i, k) = require_i64(row[k], row_where + "[" + std::to_string(k) + "]");
    }
    return m;
}

long long to_i64(const Int& v, const std::string& where) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::runtime_error(where + ": entry exceeds the 64-bit document range");
    return static_cast<long long>(v);
}

ordered_json render_matrix(const IntMatrix& m, const std::string& where) {
    ordered_json j = ordered_json::array();
    if (m.rows() == 0 || m.cols() == 0)
        return j;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(to_i64(m.at(i, k), where));
        j.push_back(std::move(row));
    }
    return j;
}

} // namespace

ModuleDocument parse_module_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail("$", "expected a JSON object");

    static const std::array<const char*, 6> known = {"O",    "U",    "T",
                                                     "maps", "name", "provenance"};
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k)
                ok = true;
        if (!ok)
            fail("$", "unknown field \"" + key + "\"");
    }
    for (const char* k : {"O", "U", "T", "maps"})
        if (!j.contains(k))
            fail("$", std::string("missing field \"") + k + "\"");

    ModuleDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            fail("name", "expected a string");
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("provenance")) {
        if (!j["provenance"].is_string())
            fail("provenance", "expected a string");
        doc.provenance = j["provenance"].get<std::string>();
    }

    for (Part p : {Part::O, Part::U, Part::T}) {
        const json& arr = j[part_name(p)];
        if (!arr.is_array() || arr.size() != 8)
            fail(part_name(p), "expected an array of 8 orders lists");
        for (int n = 0; n < 8; ++n)
            doc.module.part(p)[n] = PresentedGroup(parse_orders(
                arr[n], std::string(part_name(p)) + "[" + std::to_string(n) + "]"));
    }

    const json& maps = j["maps"];
    if (!maps.is_object())
        fail("maps", "expected an object");
    for (const auto& [key, value] : maps.items()) {
        bool ok = false;
        for (const auto& fi : kMapFamilies)
            if (key == fi.name)
                ok = true;
        if (!ok)
            fail("maps", "unknown field \"" + key + "\"");
    }
    for (const auto& fi : kMapFamilies) {
        if (!maps.contains(fi.name))
            fail("maps", std::string("missing field \"") + fi.name + "\"");
        const json& arr = maps[fi.name];
        std::string where = std::string("maps.") + fi.name;
        if (!arr.is_array() || arr.size() != 8)
            fail(where, "expected an array of 8 matrices");
        for (int n = 0; n < 8; ++n) {
            std::size_t rows = doc.module.group(fi.codomain, n + fi.degree_shift).rank();
            std::size_t cols = doc.module.group(fi.domain, n).rank();
            doc.module.family(fi.id)[n] =
                parse_matrix(arr[n], rows, cols, where + "[" + std::to_string(n) + "]");
        }
    }
    return doc;
}

std::string render_module_document(const ModuleDocument& doc) {
    ordered_json j;
    if (doc.name)
        j["name"] = *doc.name;
    if (doc.provenance)
        j["provenance"] = *doc.provenance;
    for (Part p : {Part::O, Part::U, Part::T}) {
        ordered_json arr = ordered_json::array();
        for (int n = 0; n < 8; ++n) {
            ordered_json orders = ordered_json::array();
            for (const Int& d : doc.module.group(p, n).orders())
                orders.push_back(to_i64(d, part_name(p)));
            arr.push_back(std::move(orders));
        }
        j[part_name(p)] = std::move(arr);
    }
    ordered_json maps;
    for (const auto& fi : kMapFamilies) {
        ordered_json arr = ordered_json::array();
        for (int n = 0; n < 8; ++n)
            arr.push_back(
                render_matrix(doc.module.matrix(fi.id, n), std::string("maps.") + fi.name));
        maps[fi.name] = std::move(arr);
    }
    j["maps"] = std::move(maps);
    return j.dump(1) + "\n";
}

ModuleDocument load_module_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_module_document(buf.str());
}

void save_module_document(const ModuleDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << render_module_document(doc);
}

} // namespace crtkit
