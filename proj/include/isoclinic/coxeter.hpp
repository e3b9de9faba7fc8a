#pragma once

#include <string>

#include "isoclinic/count.hpp"

namespace isoc {

// Sum of the root vectors of one height d, realised in gl_n as ones on the
// d-th subdiagonal.
struct PrincipalNilpotent {
    int n = 0;
    int d = 0;
    IntMatrix matrix;
    Partition jordan;
};

PrincipalNilpotent build_Nd(int n, int d);

struct CoxeterCheck {
    int n = 0;
    int d = 0;
    Partition jordan;  // of N_d
    std::string minimal_label;  // from the counting formula at slope d/n
    bool agree = false;
};

// exp(N_d) and N_d share a Jordan type, so the nilpotent is compared directly.
CoxeterCheck coxeter_check(int n, int d);
bool verify_coxeter_minimal(int n, int d);

}  // namespace isoc
