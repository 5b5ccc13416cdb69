#pragma once

#include <vector>

#include "stirsys/numeric.hpp"

namespace stirsys {

// Stirling numbers of both kinds with arbitrary-precision integers.
//
// The triangular tables grow on demand and are cached process-wide behind a
// lock, so queries are safe to call concurrently.  Out-of-range queries
// return 0 per the usual conventions (S(0,0)=s(0,0)=1, S(n,0)=s(n,0)=0 for
// n>0, zero above the diagonal).
class StirlingTable {
public:
    enum class Kind { first, second };

    explicit StirlingTable(Kind kind) : kind_(kind) {}

    Int value(int n, int k);
    int max_n() const { return int(rows_.size()) - 1; }

private:
    void extend(int n);
    Kind kind_;
    std::vector<std::vector<Int>> rows_;
};

// Cached table lookups.
Int stirling2(int n, int k);
Int stirling1(int n, int k);  // signed

// Alternating-sum closed form for S(n,m); independent of the recurrence.
Int stirling2_closed_form(int n, int m);

// Alternating sum over second-kind values giving s(n,m).
Int stirling1_closed_form(int n, int m);

bool check_orthogonality(int d);
bool check_power_identity(int n, int kmax);
bool check_s1_closed_form(int n, int m);

}  // namespace stirsys
