#pragma once

#include "lambda_ring.hpp"
#include "sampling.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace charclass {

struct VerifyOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::vector<unsigned> primes; // empty: the suite's default list
    bool signed_variant = false;  // pcurv-theorem: count the (-1)^p form as the claim
    unsigned jobs = 1;
};

struct VerifyFailure {
    std::size_t trial;
    std::string description;
};

struct VerifyReport {
    std::string suite;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<unsigned> primes;
    std::vector<VerifyFailure> failures;   // sorted by trial
    std::map<std::string, std::size_t> tallies;

    bool ok() const { return failures.empty(); }
    std::string to_text() const;
    std::string to_json() const;
};

const std::vector<std::string>& verify_suites();
bool is_verify_suite(std::string_view name);

// Trial i draws from Rng(seed + i), so the report does not depend on `jobs`.
VerifyReport run_verify(std::string_view suite, const VerifyOptions& options);

// Generators shared by the suites and the tests.
PresentationPtr random_presentation(Rng& rng, std::size_t max_generators, int max_rank,
                                    const std::vector<std::string>& names = {"E", "F", "G"});
// Integer combination of the unit, generators and rank-one monomials,
// coefficients in [-bound, bound].
K0Element random_element(Rng& rng, const PresentationPtr& pres, int bound = 2);
// Effective element with e(x) <= max_rank.
K0Element random_effective(Rng& rng, const PresentationPtr& pres, int max_rank);
// Rank-preserving morphism sending each generator to a sum of target
// generators, top exterior powers and unit classes.
RingMorphism random_morphism(Rng& rng, const PresentationPtr& source, const PresentationPtr& target);

} // namespace charclass
