#include "doctest.h"

#include <algorithm>

#include "g2char/document.hpp"
#include "g2char/hcmod.hpp"

using namespace g2char;

namespace {

const RootSystem& rs() {
    static const RootSystem r = build_g2();
    return r;
}

}  // namespace

TEST_CASE("character documents are stable and carry the schema") {
    VirtualCharacter chi = r_O8(rs());
    auto doc = character_document(chi, "eval \"RO8\" --basis ind");
    CHECK(doc["basis"] == "ind");
    CHECK(doc["window"].is_null());
    REQUIRE(doc["terms"].size() == 4);
    CHECK(doc["terms"][0]["a"] == 0);
    CHECK(doc["terms"][0]["b"] == 0);
    CHECK(doc["terms"][0]["coeff"] == 1);
    CHECK(doc["terms"][1]["a"] == 0);
    CHECK(doc["terms"][1]["b"] == 1);
    CHECK(doc["terms"][1]["coeff"] == -1);
    CHECK(doc["meta"]["version"] == kVersion);

    // field order and bytes are reproducible
    CHECK(doc.dump() == character_document(r_O8(rs()), "eval \"RO8\" --basis ind").dump());
    std::string keys;
    for (auto it = doc.begin(); it != doc.end(); ++it)
        keys += it.key() + ",";
    CHECK(keys == "basis,window,terms,meta,");

    MultiplicityEngine engine(rs());
    VirtualCharacter dec = ind_decompose(rs(), engine, chi, TruncationWindow{2});
    auto wdoc = character_document(dec, "x");
    CHECK(wdoc["window"] == 2);
}

TEST_CASE("csv emitters") {
    VirtualCharacter chi = r_O8(rs());
    CHECK(character_csv(chi) ==
          "a,b,coeff\n0,0,1\n0,1,-1\n1,1,1\n2,0,-1\n");

    WeightSystem ws = expand_weight_system(rs(), freudenthal_table(rs(), {1, 0}));
    std::string csv = weight_system_csv(ws);
    CHECK(csv.find("a,b,mult\n") == 0);
    CHECK(csv.find("0,0,1\n") != std::string::npos);
    // header plus seven weights
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
}

TEST_CASE("weight system document") {
    WeightSystem ws = expand_weight_system(rs(), freudenthal_table(rs(), {0, 1}));
    auto doc = weight_system_document(rs(), ws, "weights 0 1");
    CHECK(doc["lambda"]["a"] == 0);
    CHECK(doc["dim"] == 14);
    CHECK(doc["weights"].size() == 13);
}

TEST_CASE("report rendering") {
    MultiplicityEngine engine(rs());
    VerifyContext ctx{rs(), engine};
    VerificationReport r = verify_prop24(ctx);
    std::string text = report_text(r);
    CHECK(text.find("PASS  prop24") == 0);
    CHECK(text.find("w_lambda1_order=4") != std::string::npos);

    auto doc = report_document(r);
    CHECK(doc["status"] == "pass");
    CHECK(doc["witness"].is_null());
    CHECK(doc["params"]["w_lambda1_order"] == 4);

    PaperFixtures fx = paper_fixtures();
    fx.prop24_lambda1[0].coeff = -1;
    VerificationReport bad = verify_prop24(ctx, fx);
    std::string bad_text = report_text(bad);
    CHECK(bad_text.find("FAIL  prop24") == 0);
    CHECK(bad_text.find("witness") != std::string::npos);
    auto bad_doc = report_document(bad);
    CHECK(bad_doc["status"] == "fail");
    CHECK(bad_doc["witness"]["a"] == 0);
    CHECK(bad_doc["witness"]["expected"] == -1);
    CHECK(bad_doc["witness"]["actual"] == 1);
}
