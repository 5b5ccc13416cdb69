#include <doctest.h>

#include "stirsys/stirling.hpp"

using namespace stirsys;

TEST_CASE("second kind conventions and values") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(2, 3) == 0);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(-1, 0) == 0);
}

TEST_CASE("first kind values from the falling factorial") {
    CHECK(stirling1(0, 0) == 1);
    CHECK(stirling1(2, 1) == -1);
    CHECK(stirling1(3, 1) == 2);
    CHECK(stirling1(3, 2) == -3);
    CHECK(stirling1(6, 3) == -225);
    CHECK(stirling1(4, 0) == 0);
    CHECK(stirling1(2, 3) == 0);
}

TEST_CASE("recurrence agrees with the alternating closed form") {
    for (int n = 0; n <= 25; ++n)
        for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == stirling2_closed_form(n, k));
}

TEST_CASE("orthogonality of the two kinds") {
    CHECK(check_orthogonality(0));
    CHECK(check_orthogonality(5));
    CHECK(check_orthogonality(20));
}

TEST_CASE("power identity") {
    CHECK(check_power_identity(1, 8));
    CHECK(check_power_identity(3, 5));
    CHECK(check_power_identity(8, 8));
}

TEST_CASE("first-kind closed form as printed") {
    CHECK(check_s1_closed_form(0, 0));
    CHECK(check_s1_closed_form(4, 4));  // diagonal: s(n,n) = 1
    CHECK(stirling1_closed_form(3, 1) == 2);
    CHECK(check_s1_closed_form(3, 1));
    CHECK(check_s1_closed_form(6, 3));
    for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= n; ++m) CHECK(check_s1_closed_form(n, m));
}

TEST_CASE("big values stay exact") {
    // 25! and friends exceed 64-bit range; spot-check a couple of known rows
    CHECK(stirling2(25, 12).str() == "362262620784874680");
    CHECK(stirling1(25, 1).str() == "620448401733239439360000");  // 24!
}
