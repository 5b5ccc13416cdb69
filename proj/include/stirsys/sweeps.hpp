#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stirsys/identities.hpp"

namespace stirsys {

// Exhaustive desk-scale parameter sweeps over the module invariants.  Each
// case is reported through the sink (when given) as an IdentityReport-style
// record; failures are collected into the outcome.
struct SweepOutcome {
    int total = 0;
    int failed = 0;
    std::vector<std::string> failures;  // offending parameter tuples

    bool ok() const { return failed == 0; }
    void count(bool pass, const std::string& tuple) {
        ++total;
        if (!pass) {
            ++failed;
            if (failures.size() < 20) failures.push_back(tuple);
        }
    }
};

using RecordSink = std::function<void(const IdentityReport&)>;

// cpoly == cpoly_egf for k1,k2 <= 5, l <= 12.
SweepOutcome sweep_two_route(const RecordSink& sink = {});

// Grid inversion identities, parts (i)-(iii), k1,k2 <= 4, l <= 10, plus the
// vanishing corollary at l = k1+k2-1.
SweepOutcome sweep_lemma(const RecordSink& sink = {});

// Root-encoded solutions over all staircases r <= 6, l in {r, r+1, r+2},
// 20 seeded multiplicity compositions each; also finds a witness that a
// zero multiplicity breaks the solution.
SweepOutcome sweep_thest(std::uint64_t seed, const RecordSink& sink = {});

// det_bareiss == det_closed_form over all staircases r <= 6.
SweepOutcome sweep_det(const RecordSink& sink = {});

// Quotient-ring sweep over staircases r <= 5 and all relations with
// a,b <= 3 plus the axis cases: reduced solutions, (b_R)_red agreement,
// representative independence, determinants, and certificates.
SweepOutcome sweep_quotient(const RecordSink& sink = {});

// Row-relation lemma boxes: a,b <= 3, k1,k2 <= 3, l <= 8 (pos) and
// b <= k2 <= 4, k1 <= 3, l <= 8 (neg).
SweepOutcome sweep_lemgp(const RecordSink& sink = {});

// All applications checkers over their parameter boxes, including the
// printed-vs-derived weighted-form report and the generating-function
// relation through order 12.
SweepOutcome sweep_identities(const RecordSink& sink = {});

// Orthogonality d <= 20, recurrence vs closed form n <= 25, EGF agreement
// m <= 15, the power identity n <= 8, and the first-kind closed form.
SweepOutcome sweep_stirling(const RecordSink& sink = {});

}  // namespace stirsys
