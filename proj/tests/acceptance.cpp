// Acceptance gate: runs one check per shipped claim group and prints a
// single pass/fail line for each. Exit status 0 iff every line passes.
// Pass --extended to also run the large-q checks (hours of runtime).

#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "scatlab/repro.hpp"

using namespace scatlab;

namespace {

struct Criterion {
    const char* id;
    const char* title;
    std::function<void(const ReproOptions&)> run;
};

int run_all(bool extended) {
    ReproOptions opt;
    opt.extended = extended;

    using detail::claim_binZ_empty;
    using detail::claim_catalog_inequivalent;
    using detail::claim_criteria;
    using detail::claim_dichotomy_n5;
    using detail::claim_duality;
    using detail::claim_equiv_witness;
    using detail::claim_geometry;
    using detail::claim_mrd_bridge;
    using detail::claim_mrd_central;
    using detail::claim_recognizers;
    using detail::claim_scattered;
    using detail::claim_trin_empty;

    std::vector<Criterion> criteria = {
        {"A1", "hexic linear set is maximum scattered at q in {5,9,13}",
         [](const ReproOptions& o) {
             for (std::uint64_t q : {5ull, 9ull, 13ull}) claim_scattered(q, o);
         }},
        {"A2", "binomial dichotomy at n=5, q=3 over all shifts and delta",
         [](const ReproOptions& o) { claim_dichotomy_n5(o); }},
        {"A3", "vertex/axis geometry and projection at q in {5,9}",
         [](const ReproOptions& o) {
             for (std::uint64_t q : {5ull, 9ull}) claim_geometry(q, o);
         }},
        {"A4", "explicit equivalence witness onto family 4 at q=5",
         [](const ReproOptions& o) { claim_equiv_witness(o); }},
        {"A5", "exhaustive inequivalence from the catalog at q in {9,13}",
         [](const ReproOptions& o) {
             for (std::uint64_t q : {9ull, 13ull}) claim_trin_empty(q, o);
             claim_binZ_empty(o);
             for (std::uint64_t q : {9ull, 13ull}) claim_catalog_inequivalent(q, o);
         }},
        {"A6", "MRD bridge: (6,6,5;5) code and MRD iff scattered over binomials",
         [](const ReproOptions& o) {
             claim_mrd_central(o);
             claim_mrd_bridge(o);
         }},
        {"A7", "Gabidulin/twisted recognition and idealiser types",
         [](const ReproOptions& o) { claim_recognizers(o); }},
        {"A8", "Delsarte duality involution and dual recognition",
         [](const ReproOptions& o) { claim_duality(o); }},
        {"A9", "vertex recognition criteria round-trips",
         [](const ReproOptions& o) { claim_criteria(o); }},
    };
    if (extended) {
        criteria.push_back(
            {"A1x", "hexic linear set is maximum scattered at q in {17,25,29}",
             [](const ReproOptions& o) {
                 for (std::uint64_t q : {17ull, 25ull, 29ull}) claim_scattered(q, o);
             }});
        criteria.push_back({"A5x", "trinomial systems empty at q=17",
                            [](const ReproOptions& o) { claim_trin_empty(17, o); }});
    }

    int failures = 0;
    for (const auto& c : criteria) {
        std::string verdict = "pass";
        std::string why;
        try {
            c.run(opt);
        } catch (const error& e) {
            verdict = "FAIL";
            why = std::string(" (") + e.what() + ")";
            ++failures;
        }
        std::printf("%-3s %-4s %s%s\n", c.id, verdict.c_str(), c.title, why.c_str());
        std::fflush(stdout);
    }
    if (failures)
        std::printf("acceptance: %d criterion group(s) failed\n", failures);
    else
        std::printf("acceptance: all criteria passed\n");
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;
    return run_all(extended);
}
