#pragma once
// JSON input documents and machine-readable reports.
//
// An input document carries either a single family or a paired system, with
// 1-indexed elements:
//
//   {"n": 3, "family": [[1], [2, 3]]}
//   {"n": 3, "A": [[1], [2]], "B": [[1, 3], [2, 3]]}
//
// Sets are arrays, order-insensitive; duplicate elements are rejected.
// Reports embed the instance they were produced from, so a report can be
// parsed and re-verified.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "az/identity.hpp"
#include "az/subset.hpp"

namespace az {

struct InputDocument {
    int n = 0;
    std::optional<std::vector<std::vector<int>>> family;
    std::optional<std::vector<std::vector<int>>> a_sets;
    std::optional<std::vector<std::vector<int>>> b_sets;

    bool is_family() const { return family.has_value(); }
};

InputDocument parse_input_document(const nlohmann::json& doc);
InputDocument load_input_file(const std::string& path);

SetFamily family_from_document(const InputDocument& doc);
PairedSystem paired_from_document(const InputDocument& doc);

InputDocument document_from_family(const SetFamily& family);
InputDocument document_from_paired(const PairedSystem& system);

nlohmann::json document_to_json(const InputDocument& doc);

// Full report: identity, mode, parameters, instance, result, term count,
// elapsed time.
nlohmann::json report_to_json(const IdentityReport& report, const InputDocument& instance);

struct ParsedReport {
    IdentityId id = IdentityId::az;
    VerifyMode mode = VerifyMode::numeric;
    InputDocument instance;
    std::optional<Rat> a;
    std::optional<Rat> m;
    std::string result;  // lhs or residual, as printed
    bool holds = false;
};

ParsedReport parse_report(const nlohmann::json& doc);

// Route a document to the right verifier. Throws az::Error for kind
// mismatches, missing or non-integer parameters, and symbolic requests on
// identities that have no symbolic form.
IdentityReport dispatch_verify(const InputDocument& doc, IdentityId id, VerifyMode mode,
                               const std::optional<Rat>& a, const std::optional<Rat>& m);

// One-line result ("lhs = 1" / "residual = 0"), matching the CLI output.
std::string result_line(const IdentityReport& report);

}  // namespace az
