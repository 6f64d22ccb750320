#include "doctest.h"

#include "az/errors.hpp"
#include "az/gen.hpp"
#include "az/io.hpp"

using az::InputDocument;
using az::Rat;
using nlohmann::json;

TEST_CASE("input documents parse and validate") {
    const auto family_doc = az::parse_input_document(json::parse(R"({"n":2,"family":[[1],[2]]})"));
    CHECK(family_doc.n == 2);
    CHECK(family_doc.is_family());
    CHECK(az::family_from_document(family_doc).to_string() == "{{1},{2}}");

    const auto paired_doc = az::parse_input_document(
        json::parse(R"({"n":3,"A":[[1],[2]],"B":[[1,3],[2,3]]})"));
    CHECK(!paired_doc.is_family());
    const az::PairedSystem system = az::paired_from_document(paired_doc);
    CHECK(system.q() == 2);
    CHECK(system.a_of(0).to_string() == "{1}");
    CHECK(system.b_of(1).to_string() == "{2,3}");

    // Sets are order-insensitive.
    const auto shuffled = az::parse_input_document(json::parse(R"({"n":3,"family":[[3,1]]})"));
    CHECK(az::family_from_document(shuffled).to_string() == "{{1,3}}");

    CHECK_THROWS_AS(az::parse_input_document(json::parse(R"({"family":[[1]]})")), az::ParseError);
    CHECK_THROWS_AS(az::parse_input_document(json::parse(R"({"n":2})")), az::ParseError);
    CHECK_THROWS_AS(
        az::parse_input_document(json::parse(R"({"n":2,"family":[[1]],"A":[[1]],"B":[[1]]})")),
        az::ParseError);
    CHECK_THROWS_AS(az::parse_input_document(json::parse(R"({"n":2,"A":[[1]]})")),
                    az::ParseError);
    CHECK_THROWS_AS(az::parse_input_document(json::parse(R"({"n":2,"A":[[1]],"B":[]})")),
                    az::ParseError);
    CHECK_THROWS_AS(az::parse_input_document(json::parse(R"({"n":2,"family":[[0]]})")),
                    az::ParseError);
    CHECK_THROWS_AS(az::parse_input_document(json::parse(R"({"n":2,"family":[[3]]})")),
                    az::ParseError);
    CHECK_THROWS_AS(az::parse_input_document(json::parse(R"({"n":2,"family":[[1,1]]})")),
                    az::ParseError);
    CHECK_THROWS_AS(az::parse_input_document(json::parse(R"({"n":0,"family":[[1]]})")),
                    az::ParseError);
}

TEST_CASE("dispatch routes and rejects") {
    const auto family_doc = az::parse_input_document(json::parse(R"({"n":2,"family":[[1],[2]]})"));
    const auto paired_doc =
        az::parse_input_document(json::parse(R"({"n":2,"A":[[1]],"B":[[1,2]]})"));

    CHECK(az::dispatch_verify(family_doc, az::IdentityId::az, az::VerifyMode::numeric, {}, {})
              .holds);
    CHECK(az::dispatch_verify(family_doc, az::IdentityId::main1, az::VerifyMode::numeric,
                              Rat(2), Rat(3))
              .lhs == Rat(1));
    CHECK(az::dispatch_verify(family_doc, az::IdentityId::main1, az::VerifyMode::symbolic, {},
                              {})
              .holds);
    CHECK(az::dispatch_verify(paired_doc, az::IdentityId::ac, az::VerifyMode::numeric, {}, {})
              .holds);

    // Kind mismatches and missing parameters are usage errors.
    CHECK_THROWS_AS(
        az::dispatch_verify(paired_doc, az::IdentityId::az, az::VerifyMode::numeric, {}, {}),
        az::ParseError);
    CHECK_THROWS_AS(
        az::dispatch_verify(family_doc, az::IdentityId::ac, az::VerifyMode::numeric, {}, {}),
        az::ParseError);
    CHECK_THROWS_AS(az::dispatch_verify(family_doc, az::IdentityId::main1,
                                        az::VerifyMode::numeric, Rat(2), {}),
                    az::ParseError);
    CHECK_THROWS_AS(az::dispatch_verify(family_doc, az::IdentityId::az_m,
                                        az::VerifyMode::numeric, {}, {}),
                    az::ParseError);
    CHECK_THROWS_AS(az::dispatch_verify(family_doc, az::IdentityId::az_m,
                                        az::VerifyMode::numeric, {}, Rat(1, 2)),
                    az::ParseError);
    CHECK_THROWS_AS(
        az::dispatch_verify(family_doc, az::IdentityId::az, az::VerifyMode::symbolic, {}, {}),
        az::ParseError);
    CHECK_THROWS_AS(
        az::dispatch_verify(family_doc, az::IdentityId::lym, az::VerifyMode::symbolic, {}, {}),
        az::ParseError);

    // Pole and hypothesis violations surface as domain errors.
    CHECK_THROWS_AS(az::dispatch_verify(family_doc, az::IdentityId::main1,
                                        az::VerifyMode::numeric, Rat(1), Rat(-2)),
                    az::PoleError);
}

TEST_CASE("reports round-trip through JSON") {
    az::SplitMix64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.range(2, 7));
        const long cap = std::min<long>((1L << n) - 1, 10);
        const az::SetFamily family =
            az::random_family({rng.next(), n, static_cast<int>(rng.range(1, cap)), false});
        const InputDocument doc = az::document_from_family(family);

        const bool symbolic = trial % 3 == 0;
        std::optional<Rat> a, m;
        az::VerifyMode mode = az::VerifyMode::symbolic;
        if (!symbolic) {
            const auto params = az::random_pole_free_params(rng, family.min_size(), n);
            a = params.first;
            m = params.second;
            mode = az::VerifyMode::numeric;
        }
        const az::IdentityReport report =
            az::dispatch_verify(doc, az::IdentityId::main1, mode, a, m);
        const json encoded = az::report_to_json(report, doc);

        // Re-verify the embedded instance; the result must reproduce.
        const az::ParsedReport parsed = az::parse_report(encoded);
        CHECK(parsed.id == az::IdentityId::main1);
        CHECK(parsed.holds == report.holds);
        const az::IdentityReport again =
            az::dispatch_verify(parsed.instance, parsed.id, parsed.mode, parsed.a, parsed.m);
        CHECK(az::result_line(again) != "");
        if (mode == az::VerifyMode::numeric) {
            CHECK(again.lhs == report.lhs);
            CHECK(parsed.result == report.lhs->to_string());
        } else {
            CHECK(again.residual == report.residual);
        }
    }

    // Shifted-form reports carry the integer m and round-trip the same way.
    {
        const auto family_doc =
            az::parse_input_document(json::parse(R"({"n":3,"family":[[1],[2,3]]})"));
        const az::IdentityReport report = az::dispatch_verify(
            family_doc, az::IdentityId::az_m, az::VerifyMode::numeric, {}, Rat(2));
        const json encoded = az::report_to_json(report, family_doc);
        CHECK(encoded["m"] == "2");
        const az::ParsedReport parsed = az::parse_report(encoded);
        CHECK(az::dispatch_verify(parsed.instance, parsed.id, parsed.mode, parsed.a, parsed.m)
                  .lhs == report.lhs);
    }

    // Paired reports carry A and B.
    const az::PairedSystem system = az::random_paired_system({99, 4, 2, false});
    const InputDocument doc = az::document_from_paired(system);
    const az::IdentityReport report =
        az::dispatch_verify(doc, az::IdentityId::main2, az::VerifyMode::numeric, Rat(1), Rat(1));
    const json encoded = az::report_to_json(report, doc);
    CHECK(encoded["instance"].contains("A"));
    const az::ParsedReport parsed = az::parse_report(encoded);
    const az::IdentityReport again =
        az::dispatch_verify(parsed.instance, parsed.id, parsed.mode, parsed.a, parsed.m);
    CHECK(again.lhs == report.lhs);
}

TEST_CASE("result lines") {
    const auto family_doc = az::parse_input_document(json::parse(R"({"n":2,"family":[[1]]})"));
    const auto numeric = az::dispatch_verify(family_doc, az::IdentityId::main1,
                                             az::VerifyMode::numeric, Rat(1), Rat(0));
    CHECK(az::result_line(numeric) == "lhs = 1");
    const auto symbolic =
        az::dispatch_verify(family_doc, az::IdentityId::main1, az::VerifyMode::symbolic, {}, {});
    CHECK(az::result_line(symbolic) == "residual = 0");
}
