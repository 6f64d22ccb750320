#include "az/io.hpp"

#include <algorithm>
#include <fstream>

#include "az/errors.hpp"

namespace az {

namespace {

using nlohmann::json;

std::vector<std::vector<int>> parse_set_list(const json& node, const std::string& key, int n) {
    if (!node.is_array()) throw ParseError("\"" + key + "\" must be an array of sets");
    std::vector<std::vector<int>> out;
    for (const auto& set_node : node) {
        if (!set_node.is_array())
            throw ParseError("\"" + key + "\" entries must be arrays of elements");
        std::vector<int> set;
        for (const auto& elem : set_node) {
            if (!elem.is_number_integer())
                throw ParseError("\"" + key + "\" elements must be integers");
            const int e = elem.get<int>();
            if (e < 1 || e > n)
                throw ParseError("element " + std::to_string(e) + " outside [1, " +
                                 std::to_string(n) + "] in \"" + key + "\"");
            if (std::find(set.begin(), set.end(), e) != set.end())
                throw ParseError("duplicate element " + std::to_string(e) + " in \"" + key +
                                 "\"");
            set.push_back(e);
        }
        out.push_back(std::move(set));
    }
    return out;
}

json set_list_to_json(const std::vector<std::vector<int>>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(s);
    return out;
}

std::vector<std::vector<int>> masks_to_sets(const std::vector<std::uint32_t>& masks, int n) {
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (std::uint32_t bits : masks) out.push_back(SubsetMask(bits, n).elements());
    return out;
}

long integer_param(const Rat& value, const std::string& name) {
    if (value.den() != 1)
        throw ParseError("--" + name + " must be an integer for this identity, got " +
                         value.to_string());
    if (!value.num().fits_slong_p())
        throw ParseError("--" + name + " out of range");
    return value.num().get_si();
}

}  // namespace

InputDocument parse_input_document(const json& doc) {
    if (!doc.is_object()) throw ParseError("input document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("input document needs an integer \"n\"");
    InputDocument out;
    out.n = doc["n"].get<int>();
    if (out.n < 1) throw ParseError("\"n\" must be at least 1");

    const bool has_family = doc.contains("family");
    const bool has_a = doc.contains("A");
    const bool has_b = doc.contains("B");
    if (has_family == (has_a || has_b))
        throw ParseError("provide exactly one of \"family\" or \"A\"+\"B\"");
    if (has_family) {
        out.family = parse_set_list(doc["family"], "family", out.n);
    } else {
        if (!has_a || !has_b) throw ParseError("paired input needs both \"A\" and \"B\"");
        out.a_sets = parse_set_list(doc["A"], "A", out.n);
        out.b_sets = parse_set_list(doc["B"], "B", out.n);
        if (out.a_sets->size() != out.b_sets->size())
            throw ParseError("\"A\" and \"B\" must have the same length");
    }
    return out;
}

InputDocument load_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return parse_input_document(doc);
}

SetFamily family_from_document(const InputDocument& doc) {
    if (!doc.is_family())
        throw ParseError("this identity needs a \"family\" input, got a paired system");
    // Empty members are admitted here; each verifier enforces its own
    // nonemptiness hypothesis.
    return SetFamily::from_sets(doc.n, *doc.family, /*allows_empty=*/true);
}

PairedSystem paired_from_document(const InputDocument& doc) {
    if (doc.is_family())
        throw ParseError("this identity needs \"A\"+\"B\" input, got a single family");
    std::vector<std::uint32_t> a_bits, b_bits;
    for (const auto& s : *doc.a_sets)
        a_bits.push_back(SubsetMask::from_elements(s, doc.n).bits());
    for (const auto& s : *doc.b_sets)
        b_bits.push_back(SubsetMask::from_elements(s, doc.n).bits());
    return PairedSystem(doc.n, std::move(a_bits), std::move(b_bits));
}

InputDocument document_from_family(const SetFamily& family) {
    InputDocument out;
    out.n = family.ground_n();
    out.family = masks_to_sets(family.raw_members(), out.n);
    return out;
}

InputDocument document_from_paired(const PairedSystem& system) {
    InputDocument out;
    out.n = system.ground_n();
    out.a_sets = masks_to_sets(system.raw_a(), out.n);
    out.b_sets = masks_to_sets(system.raw_b(), out.n);
    return out;
}

json document_to_json(const InputDocument& doc) {
    json out;
    out["n"] = doc.n;
    if (doc.family) out["family"] = set_list_to_json(*doc.family);
    if (doc.a_sets) out["A"] = set_list_to_json(*doc.a_sets);
    if (doc.b_sets) out["B"] = set_list_to_json(*doc.b_sets);
    return out;
}

json report_to_json(const IdentityReport& report, const InputDocument& instance) {
    json out;
    out["identity"] = to_string(report.id);
    out["mode"] = to_string(report.mode);
    out["instance"] = document_to_json(instance);
    if (report.a) out["a"] = report.a->to_string();
    if (report.m) out["m"] = report.m->to_string();
    if (report.lhs) out["lhs"] = report.lhs->to_string();
    if (report.residual) {
        out["residual"] = report.residual->to_string();
        out["residual_terms"] = report.residual->term_count();
    }
    out["holds"] = report.holds;
    out["term_count"] = report.term_count;
    out["elapsed_us"] = report.elapsed.count();
    return out;
}

ParsedReport parse_report(const json& doc) {
    if (!doc.is_object() || !doc.contains("identity") || !doc.contains("instance"))
        throw ParseError("not a report document");
    ParsedReport out;
    out.id = parse_identity_id(doc["identity"].get<std::string>());
    out.mode = doc["mode"].get<std::string>() == "symbolic" ? VerifyMode::symbolic
                                                            : VerifyMode::numeric;
    out.instance = parse_input_document(doc["instance"]);
    if (doc.contains("a")) out.a = Rat::parse(doc["a"].get<std::string>());
    if (doc.contains("m")) out.m = Rat::parse(doc["m"].get<std::string>());
    if (doc.contains("lhs")) out.result = doc["lhs"].get<std::string>();
    if (doc.contains("residual")) out.result = doc["residual"].get<std::string>();
    out.holds = doc.value("holds", false);
    return out;
}

IdentityReport dispatch_verify(const InputDocument& doc, IdentityId id, VerifyMode mode,
                               const std::optional<Rat>& a, const std::optional<Rat>& m) {
    if (mode == VerifyMode::symbolic && id != IdentityId::main1 && id != IdentityId::main2)
        throw ParseError(std::string("identity ") + to_string(id) + " has no symbolic mode");

    switch (id) {
        case IdentityId::lym:
            return check_lym(family_from_document(doc));
        case IdentityId::az:
            return verify_az(family_from_document(doc));
        case IdentityId::az_m:
            if (!m) throw ParseError("identity az_m requires --m");
            return verify_az_m(family_from_document(doc), integer_param(*m, "m"));
        case IdentityId::ac:
            return verify_ac(paired_from_document(doc));
        case IdentityId::ac_m:
            if (!m) throw ParseError("identity ac_m requires --m");
            return verify_ac_m(paired_from_document(doc), integer_param(*m, "m"));
        case IdentityId::main1:
            if (mode == VerifyMode::symbolic)
                return verify_main1_symbolic(family_from_document(doc));
            if (!a || !m) throw ParseError("numeric main1 requires --a and --m");
            return verify_main1_numeric(family_from_document(doc), *a, *m);
        case IdentityId::main2:
            if (mode == VerifyMode::symbolic)
                return verify_main2_symbolic(paired_from_document(doc));
            if (!a || !m) throw ParseError("numeric main2 requires --a and --m");
            return verify_main2_numeric(paired_from_document(doc), *a, *m);
    }
    throw Error("unreachable identity id");
}

std::string result_line(const IdentityReport& report) {
    if (report.lhs) return "lhs = " + report.lhs->to_string();
    if (report.residual) {
        if (report.residual->is_zero()) return "residual = 0";
        return "residual = " + report.residual->to_string() + " (" +
               std::to_string(report.residual->term_count()) + " terms)";
    }
    return "";
}

}  // namespace az
