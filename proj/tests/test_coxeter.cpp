#include "doctest.h"

#include <numeric>

#include "isoclinic/coxeter.hpp"
#include "isoclinic/oracle.hpp"

using namespace isoc;

TEST_CASE("principal nilpotents") {
    for (int n = 2; n <= 6; ++n) CHECK(build_Nd(n, 1).jordan == Partition{n});
    CHECK(build_Nd(4, 3).jordan == Partition{2, 1, 1});
    CHECK(build_Nd(5, 2).jordan == Partition{3, 2});
    CHECK_THROWS(build_Nd(4, 2));
    CHECK_THROWS(build_Nd(4, 4));
}

TEST_CASE("transpose gives the same Jordan type") {
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d < n; ++d) {
            if (std::gcd(d, n) != 1) continue;
            auto p = build_Nd(n, d);
            IntMatrix t(n, std::vector<long>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) t[i][j] = p.matrix[j][i];
            CHECK(oracle::nilpotent_jordan_type(t) == p.jordan);
        }
}

TEST_CASE("Coxeter connections realise the minimal class") {
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d < n; ++d) {
            if (std::gcd(d, n) != 1) continue;
            CAPTURE(n);
            CAPTURE(d);
            CHECK(verify_coxeter_minimal(n, d));
        }
}
