#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "primeap/constants.hpp"

using namespace primeap;

TEST_CASE("catalogue labels are unique and values finite") {
    std::set<std::string> labels;
    for (const auto& r : constants_catalogue) {
        CHECK(std::isfinite(r.value));
        CHECK(labels.insert(r.label).second);
        CHECK(*r.anchor != '\0');
    }
}

TEST_CASE("catalogue round-trips through its CSV form") {
    std::stringstream ss;
    write_catalogue(ss);
    const auto rows = load_catalogue(ss);
    REQUIRE(rows.size() == constants_catalogue.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].label == constants_catalogue[i].label);
        CHECK(rows[i].value == constants_catalogue[i].value);  // bit-exact via %.17g
        CHECK(rows[i].anchor == constants_catalogue[i].anchor);
    }
}

TEST_CASE("shipped data/constants.csv matches the compiled table") {
    std::ifstream f("data/constants.csv");
    REQUIRE(f.good());
    f.close();
    const auto mismatches = check_catalogue_file("data/constants.csv");
    CHECK(mismatches.empty());
}

TEST_CASE("a tampered catalogue is detected") {
    std::stringstream ss;
    write_catalogue(ss);
    std::string text = ss.str();
    const auto pos = text.find("0.184");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "0.185");
    const std::string path = "/tmp/primeap_tampered_catalogue.csv";
    {
        std::ofstream out(path);
        out << text;
    }
    CHECK_FALSE(check_catalogue_file(path).empty());
}

TEST_CASE("lookup by label") {
    CHECK(constant_by_label("pi.negative_const") == 237.934);
    CHECK(constant_by_label("chebyshev.psi_theta_sqrt") == 1.4262);
    CHECK_THROWS_AS(constant_by_label("no.such.constant"), std::out_of_range);
}
