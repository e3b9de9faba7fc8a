#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace isoc {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    Poly(const Rational& c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(int k, const Rational& c = 1);
    static Poly q() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int valuation() const;
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    bool integral() const;
    Poly monic() const;
    Poly shifted(int k) const;  // multiply by q^k, k >= -valuation

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
    // exact division; throws if b does not divide a
    static Poly exact_div(const Poly& a, const Poly& b);

    std::string str(const char* var = "q") const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
Poly cyclotomic(int k);
Poly q_int(int d);  // 1 + q + ... + q^{d-1}

// Reduced quotient of polynomials; the denominator is monic.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    RatFunc(Poly num, Poly den);

    static RatFunc q_power(int k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }

    Rational eval(const Rational& x) const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // num/den as plain text
    std::string str() const;
    // constant * (residual) * q^k * prod Phi_k^{e_k}, e.g. "q^-4Φ1^-1"
    std::string factored() const;

private:
    void normalise();
    Poly num_, den_;
};

// Split p = c * q^v * prod Phi_k^{e_k} * residual with residual monic and
// coprime to q and to every Phi_k, k <= max_k.
struct CyclotomicSplit {
    Rational unit;
    int qpow = 0;
    std::vector<std::pair<int, int>> phis;  // (k, exponent)
    Poly residual;
};
CyclotomicSplit split_cyclotomic(const Poly& p, int max_k = 30);

// Lagrange interpolation through (xs[i], ys[i]), xs distinct
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace isoc
