#include <gtest/gtest.h>

#include "wpsinv/catalog.hpp"
#include "wpsinv/cli.hpp"

using namespace wpsinv;

namespace {

CliResult run(std::vector<std::string> args) { return cli_dispatch(args); }

}  // namespace

TEST(Catalog, ShippedRecords) {
    const auto& c = shipped_catalog();
    EXPECT_EQ(c.version, 1);
    ASSERT_EQ(c.families.size(), 4u);
    const auto* x16 = c.find("X16");
    ASSERT_NE(x16, nullptr);
    EXPECT_EQ(x16->ambient, (WeightSystem{1, 1, 2, 3, 8}));
    EXPECT_EQ(x16->basket, parse_basket("2x1/2,1x1/3"));
    EXPECT_EQ(*x16->moduli_dim, 189);
    const auto* ci = c.find("X2_10");
    ASSERT_NE(ci, nullptr);
    EXPECT_FALSE(ci->is_hypersurface());
    EXPECT_EQ(*ci->specializes, "X10");
    EXPECT_EQ(c.find("X7"), nullptr);
}

TEST(Catalog, VerifyAllPasses) {
    const auto report = verify_all(32);
    EXPECT_TRUE(report.passed());
    EXPECT_TRUE(report.failures().empty());
    ASSERT_EQ(report.families.size(), 4u);
    EXPECT_NE(report.families[0].find("moduli-dimension"), nullptr);
    EXPECT_NE(report.families[3].find("specialization-series"), nullptr);
    EXPECT_THROW(verify_all(8), InvalidInput);
}

TEST(Catalog, EditedChiIsReported) {
    Catalog c = shipped_catalog();
    c.families[0].data = NumericalData(c.families[0].data.k3, -2, c.families[0].data.pg);
    const auto report = verify_all(c, 32);
    EXPECT_FALSE(report.passed());
    const auto failures = report.failures();
    ASSERT_FALSE(failures.empty());
    EXPECT_EQ(failures[0].family, "X16");
    EXPECT_EQ(failures[0].check.name, "plurigenera");
}

TEST(Catalog, BrokenSpecializationIsReported) {
    Catalog c = shipped_catalog();
    c.families[3].specializes = "X99";
    EXPECT_FALSE(verify_all(c, 32).passed());
    c = shipped_catalog();
    c.families[3].basket = parse_basket("1x1/2");
    EXPECT_FALSE(verify_all(c, 32).passed());
}

TEST(Catalog, JsonRoundTripIsByteIdentical) {
    const std::string first = to_json(shipped_catalog()).dump(2);
    const std::string second = to_json(parse_catalog(first)).dump(2);
    EXPECT_EQ(first, second);
    EXPECT_THROW(parse_catalog("{"), InvalidInput);
    EXPECT_THROW(parse_catalog(R"({"schema":"other","version":1,"families":[]})"), InvalidInput);
    EXPECT_THROW(parse_catalog(R"({"schema":"wpsinv-catalog","version":2,"families":[]})"), InvalidInput);
}

TEST(Cli, ModuliPrintsDimension) {
    const auto r = run({"moduli", "--weights", "1,1,2,3,8", "--degree", "16"});
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_NE(r.out.find("dim M = 189"), std::string::npos) << r.out;

    const auto j = run({"moduli", "--weights", "1,1,1,2,6", "--degree", "12", "--json"});
    ASSERT_EQ(j.exit_code, 0) << j.err;
    const auto doc = Json::parse(j.out);
    EXPECT_EQ(doc.at("moduli_dimension"), 236);
    EXPECT_EQ(doc.at("aut_dimension"), 66);
    EXPECT_EQ(doc.at("formula_extrapolated"), false);
}

TEST(Cli, NoetherJson) {
    const auto r = run({"noether", "--pg", "5", "--json"});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto doc = Json::parse(r.out);
    EXPECT_EQ(doc.at("min"), "52/15");
    EXPECT_EQ(doc.at("expected"), "10/3");
    EXPECT_EQ(doc.at("exceeds_expected"), true);
}

TEST(Cli, NoetherTableTsv) {
    const auto r = run({"noether", "--table", "6:10", "--tsv"});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_NE(r.out.find("55/12"), std::string::npos);
    EXPECT_NE(r.out.find("87/10"), std::string::npos);
    std::size_t lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    EXPECT_EQ(lines, 6u);
}

TEST(Cli, HilbertJson) {
    const auto r = run({"hilbert", "--weights", "1,1,2,3,8", "--degree", "16", "--terms", "5", "--json"});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto doc = Json::parse(r.out);
    EXPECT_EQ(doc.at("coefficients"), Json::parse("[1,2,4,7,11]"));
    const auto ci = run({"hilbert", "--weights", "1,1,1,1,2,5", "--degree", "2,10", "--terms", "11", "--json"});
    ASSERT_EQ(ci.exit_code, 0) << ci.err;
    EXPECT_EQ(Json::parse(ci.out).at("coefficients").back(), 342);
}

TEST(Cli, RrAndSolve) {
    const auto r = run({"rr", "--k3", "1/3", "--chi", "-1", "--pg", "2", "--basket", "2x1/2,1x1/3", "--m-max", "4"});
    EXPECT_EQ(r.exit_code, 0) << r.err;
    const auto s = run({"solve", "--preset", "pg2", "--json"});
    ASSERT_EQ(s.exit_code, 0) << s.err;
    EXPECT_NE(s.out.find("\"chi\": -1"), std::string::npos) << s.out;
}

TEST(Cli, CheckAndVerify) {
    EXPECT_EQ(run({"check", "--family", "x16"}).exit_code, 0);
    EXPECT_EQ(run({"catalog", "verify"}).exit_code, 0);
    EXPECT_EQ(run({"catalog", "show", "--json"}).exit_code, 0);
    const auto bad = run({"check", "--weights", "1,1,2,3,8", "--degree", "16", "--k3", "1/3", "--chi", "-2",
                          "--pg", "2", "--basket", "2x1/2,1x1/3"});
    EXPECT_EQ(bad.exit_code, 1) << bad.out << bad.err;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"rr", "--k3", "1/3", "--chi", "-1", "--pg", "2", "--basket", "1x1/2,1x1/3"}).exit_code, 1);
    EXPECT_EQ(run({"noether", "--pg", "4"}).exit_code, 1);
    EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
    EXPECT_EQ(run({}).exit_code, 2);
    EXPECT_EQ(run({"moduli", "--weights", "1,1,2,3,8"}).exit_code, 2);
    EXPECT_EQ(run({"hilbert", "--weights", "1,x", "--degree", "4"}).exit_code, 2);
    EXPECT_EQ(run({"noether"}).exit_code, 2);
    EXPECT_EQ(run({"moduli", "--help"}).exit_code, 0);
}

TEST(Cli, RepeatRunsAreIdentical) {
    const std::vector<std::vector<std::string>> commands{
        {"hilbert", "--weights", "1,1,2,3,8", "--degree", "16", "--json"},
        {"rr", "--k3", "1/3", "--chi", "-1", "--pg", "2", "--basket", "2x1/2,1x1/3", "--json"},
        {"solve", "--preset", "pg3", "--json"},
        {"noether", "--table", "5:20", "--json"},
        {"catalog", "verify", "--json"},
    };
    for (const auto& c : commands) {
        const auto a = run(c);
        const auto b = run(c);
        EXPECT_EQ(a.exit_code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(Json::parse(a.out).dump(2) + "\n", a.out);
    }
}
