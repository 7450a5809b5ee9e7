#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "cdopt/io.hpp"
#include "cdopt/restriction.hpp"
#include "oracles.hpp"

using cdopt::CocycleSpec;
using cdopt::ExtensionFamily;
using cdopt::SignMatrix;

TEST_CASE("matrix restriction keeps the odd indices") {
    std::mt19937_64 rng(2718);
    for (int n : {4, 8, 12, 20, 28}) {
        for (int rep = 0; rep < 10; ++rep) {
            const SignMatrix m = oracles::random_sign_matrix(rng, n);
            CHECK(cdopt::restrict_matrix(m) == oracles::restrict_by_deletion(m));
        }
    }
    CHECK_THROWS_AS(cdopt::restrict_matrix(SignMatrix(6)), std::invalid_argument);
    CHECK_THROWS_AS(cdopt::restrict_matrix(SignMatrix(10)), std::invalid_argument);
}

TEST_CASE("gamma restriction and compensator coboundaries") {
    CHECK(cdopt::gamma_restriction_deltas(3) == std::vector<int>{2, 5});
    CHECK(cdopt::gamma_restriction_deltas(5) == std::vector<int>{2, 4, 7, 9});
    CHECK(cdopt::gamma_compensator_deltas(3) == std::vector<int>{3, 9});
    CHECK(cdopt::gamma_compensator_deltas(5) == std::vector<int>{3, 7, 13, 17});
    CHECK_THROWS_AS(cdopt::gamma_restriction_deltas(4), std::invalid_argument);
    CHECK_THROWS_AS(cdopt::gamma_compensator_deltas(1), std::invalid_argument);
}

TEST_CASE("spec restriction of the order-20 Hadamard fixture") {
    const CocycleSpec tilde = cdopt::restrict_spec(cdopt::d20_hadamard_spec());
    CHECK(tilde.to_text() == "m=5; d=2,4,9; k1=0; k2=1; k3=0");
}

TEST_CASE("spec restriction argument errors") {
    CHECK_THROWS_AS(cdopt::restrict_spec(CocycleSpec::parse("m=5; d=; k1=0; k2=1; k3=0")),
                    std::invalid_argument);
    // m = 4 gives even t = 2
    CHECK_THROWS_AS(cdopt::restrict_spec(CocycleSpec::parse("m=4; d=; k1=0; k2=1; k3=0")),
                    std::invalid_argument);
}

TEST_CASE("restriction commutes between matrices and specs") {
    std::mt19937_64 rng(161803);
    for (int t : {3, 5}) {
        for (int rep = 0; rep < 40; ++rep) {
            const CocycleSpec spec = oracles::random_spec(rng, 2 * t);
            CHECK(cdopt::restrict_matrix(cdopt::assemble(spec)) ==
                  cdopt::assemble(cdopt::restrict_spec(spec)));
        }
    }
}

TEST_CASE("extension family geometry and seed validation") {
    const CocycleSpec seed = CocycleSpec::parse("m=3; d=2; k1=0; k2=1; k3=0");
    const ExtensionFamily fam(seed);
    CHECK(fam.t() == 3);
    CHECK(fam.size() == 128);
    CHECK(fam.beta1_off_size() == 64);
    CHECK_THROWS_AS(fam.member(128), std::invalid_argument);

    CHECK_THROWS_AS(ExtensionFamily(CocycleSpec::parse("m=3; d=2; k1=0; k2=0; k3=0")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExtensionFamily(CocycleSpec::parse("m=4; d=2; k1=0; k2=1; k3=0")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExtensionFamily(CocycleSpec::parse("m=6; d=2; k1=0; k2=1; k3=0")),
                    std::invalid_argument);
}

TEST_CASE("extension family bit layout") {
    const CocycleSpec seed = CocycleSpec::parse("m=3; d=2; k1=0; k2=1; k3=0");
    const ExtensionFamily fam(seed);
    // index 0: just the odd lift of the seed plus beta2
    CHECK(fam.member(0).to_text() == "m=6; d=3; k1=0; k2=1; k3=0");
    // index 1: adds the first even coboundary
    CHECK(fam.member(1).to_text() == "m=6; d=2,3; k1=0; k2=1; k3=0");
    // index 32 sets the gamma bit (2t-1 = 5), pulling in the compensator {3, 9}
    CHECK(fam.member(32).to_text() == "m=6; d=9; k1=0; k2=1; k3=1");
    // index 33 is the first embedding witness found for this seed
    CHECK(fam.member(33).to_text() == "m=6; d=2,9; k1=0; k2=1; k3=1");
    // index 64 sets the beta1 bit (2t = 6)
    CHECK(fam.member(64).to_text() == "m=6; d=3; k1=1; k2=1; k3=0");
}

TEST_CASE("every family member restricts to its seed") {
    const CocycleSpec seeds[] = {
        CocycleSpec::parse("m=3; d=2; k1=0; k2=1; k3=0"),
        CocycleSpec::parse("m=3; d=3,5; k1=0; k2=1; k3=0"),
        CocycleSpec::parse("m=5; d=2,4,9; k1=0; k2=1; k3=0"),
    };
    std::mt19937_64 rng(55);
    for (const CocycleSpec& seed : seeds) {
        const ExtensionFamily fam(seed);
        if (fam.t() == 3) {
            for (std::uint64_t idx = 0; idx < fam.size(); ++idx)
                CHECK(cdopt::restrict_spec(fam.member(idx)) == seed);
        } else {
            for (int rep = 0; rep < 64; ++rep)
                CHECK(cdopt::restrict_spec(fam.member(rng() % fam.size())) == seed);
        }
    }
}

TEST_CASE("family members are distinct specs") {
    const ExtensionFamily fam(CocycleSpec::parse("m=3; d=2,4; k1=0; k2=1; k3=0"));
    std::set<std::string> seen;
    for (std::uint64_t idx = 0; idx < fam.size(); ++idx)
        seen.insert(fam.member(idx).to_text());
    CHECK(seen.size() == fam.size());
}
