#include "isoclinic/coxeter.hpp"

#include <numeric>
#include <stdexcept>

#include "isoclinic/oracle.hpp"

namespace isoc {

PrincipalNilpotent build_Nd(int n, int d) {
    if (n < 2 || d <= 0 || d >= n || std::gcd(d, n) != 1)
        throw std::invalid_argument("need 0 < d < n with gcd(d, n) = 1");
    PrincipalNilpotent p;
    p.n = n;
    p.d = d;
    p.matrix.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i + d < n; ++i) p.matrix[i + d][i] = 1;
    p.jordan = oracle::nilpotent_jordan_type(p.matrix);
    return p;
}

CoxeterCheck coxeter_check(int n, int d) {
    CoxeterCheck c;
    c.n = n;
    c.d = d;
    c.jordan = build_Nd(n, d).jordan;
    auto ctx = make_context("A" + std::to_string(n - 1), true);
    auto v = minimal_class(*ctx, BraidSpec::springer(Slope(d, n)));
    if (!v.nice) throw std::logic_error("slope " + Slope(d, n).str() + " is not nice");
    c.minimal_label = ctx->ud.classes[v.minimal].label;
    c.agree = ctx->ud.classes[v.minimal].partition == c.jordan;
    return c;
}

bool verify_coxeter_minimal(int n, int d) { return coxeter_check(n, d).agree; }

}  // namespace isoc
