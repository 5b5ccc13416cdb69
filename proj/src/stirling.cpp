#include "stirsys/stirling.hpp"

#include <mutex>
#include <stdexcept>

namespace stirsys {

Int StirlingTable::value(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    extend(n);
    return rows_[n][k];
}

void StirlingTable::extend(int n) {
    if (rows_.empty()) rows_.push_back({Int(1)});  // row 0: S(0,0)=s(0,0)=1
    while (int(rows_.size()) <= n) {
        int m = int(rows_.size());  // building row m from row m-1
        const auto& prev = rows_.back();
        std::vector<Int> row(m + 1);
        row[0] = 0;
        for (int k = 1; k <= m; ++k) {
            Int carry = (k < m) ? prev[k] : Int(0);
            if (kind_ == Kind::second) {
                // S(m,k) = S(m-1,k-1) + k*S(m-1,k)
                row[k] = prev[k - 1] + k * carry;
            } else {
                // signed: s(m,k) = s(m-1,k-1) - (m-1)*s(m-1,k),
                // i.e. the coefficients of x(x-1)...(x-m+1)
                row[k] = prev[k - 1] - (m - 1) * carry;
            }
        }
        // constant coefficient of x(x-1)...(x-m+1) for m>0 is 0; same for S
        rows_.push_back(std::move(row));
    }
}

namespace {

std::mutex g_mutex;
StirlingTable g_second(StirlingTable::Kind::second);
StirlingTable g_first(StirlingTable::Kind::first);

}  // namespace

Int stirling2(int n, int k) {
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_second.value(n, k);
}

Int stirling1(int n, int k) {
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_first.value(n, k);
}

Int stirling2_closed_form(int n, int m) {
    if (n < 0 || m < 0) return 0;
    Int sum = 0;
    for (int k = 0; k <= m; ++k) {
        Int term = binomial(m, k) * int_pow(Int(k), n);
        if ((m - k) % 2) sum -= term; else sum += term;
    }
    return exact_quotient(sum, factorial(m));
}

Int stirling1_closed_form(int n, int m) {
    Int sum = 0;
    for (int k = 0; k <= n - m; ++k) {
        Int term = binomial(n - 1 + k, n - m + k) * binomial(2 * n - m, n - m - k) *
                   stirling2(n - m + k, k);
        if (k % 2) sum -= term; else sum += term;
    }
    return sum;
}

bool check_orthogonality(int d) {
    if (d < 0) throw std::invalid_argument("orthogonality needs d >= 0");
    for (int m = 0; m <= d; ++m) {
        Int s1 = 0, s2 = 0;
        for (int k = m; k <= d; ++k) {
            s1 += stirling1(k, m) * stirling2(d, k);
            s2 += stirling1(d, k) * stirling2(k, m);
        }
        Int expect = (m == d) ? 1 : 0;
        if (s1 != expect || s2 != expect) return false;
    }
    return true;
}

bool check_power_identity(int n, int kmax) {
    if (n < 1 || kmax < 1) throw std::invalid_argument("power identity needs n, kmax >= 1");
    for (int k = 1; k <= kmax; ++k) {
        Int rhs = 0;
        for (int m = 1; m <= k; ++m) rhs += binomial(k, m) * factorial(m) * stirling2(n, m);
        if (rhs != int_pow(Int(k), n)) return false;
    }
    return true;
}

bool check_s1_closed_form(int n, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("need 0 <= m <= n");
    return stirling1_closed_form(n, m) == stirling1(n, m);
}

}  // namespace stirsys
