#include "isoclinic/arith.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace isoc {

Poly::Poly(long c) {
    if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

Poly Poly::monomial(int k, const Rational& c) {
    if (k < 0) throw std::invalid_argument("negative exponent in monomial");
    Poly p;
    if (c == 0) return p;
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

Rational Poly::eval(const Rational& x) const {
    Rational s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
}

bool Poly::integral() const {
    for (auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly p = *this;
    Rational l = leading();
    for (auto& x : p.c_) x /= l;
    return p;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly p;
    if (k > 0) {
        p.c_.assign(k, Rational(0));
        p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    } else {
        if (-k > valuation()) throw std::domain_error("shift below q^0");
        p.c_.assign(c_.begin() + (-k), c_.end());
    }
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    rem = a;
    quo = Poly();
    int db = b.degree();
    if (rem.degree() < db) return;
    quo.c_.assign(rem.degree() - db + 1, Rational(0));
    Rational inv = 1 / b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        int k = rem.degree() - db;
        Rational f = rem.leading() * inv;
        quo.c_[k] = f;
        for (int i = 0; i <= db; ++i) rem.c_[i + k] -= f * b.c_[i];
        rem.trim();
    }
    quo.trim();
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    Poly quo, rem;
    divmod(a, b, quo, rem);
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return quo;
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = c_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? "-" : "+");
        first = false;
        if (k == 0 || a != 1) os << rational_str(a);
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly quo, rem;
        Poly::divmod(a, b, quo, rem);
        a = std::move(b);
        b = rem.monic();
    }
    return a.monic();
}

Poly cyclotomic(int k) {
    static std::mutex mu;
    static std::map<int, Poly> cache;
    if (k < 1) throw std::invalid_argument("cyclotomic index must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    Poly p = Poly::monomial(k) - Poly(1);
    for (int d = 1; d < k; ++d) {
        if (k % d) continue;
        auto jt = cache.find(d);
        Poly phi;
        if (jt != cache.end()) {
            phi = jt->second;
        } else {
            // build bottom-up without recursion under the lock
            phi = Poly::monomial(d) - Poly(1);
            for (int e = 1; e < d; ++e)
                if (d % e == 0) phi = Poly::exact_div(phi, cache.at(e));
            cache[d] = phi;
        }
        p = Poly::exact_div(p, phi);
    }
    cache[k] = p;
    return p;
}

Poly q_int(int d) {
    std::vector<Rational> c(d, Rational(1));
    return Poly(std::move(c));
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalise();
}

void RatFunc::normalise() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = Poly::exact_div(num_, g);
            den_ = Poly::exact_div(den_, g);
        }
    }
    Rational l = den_.leading();
    if (l != 1) {
        num_ *= Rational(1 / l);
        den_ *= Rational(1 / l);
    }
}

RatFunc RatFunc::q_power(int k) {
    if (k >= 0) return RatFunc(Poly::monomial(k));
    return RatFunc(Poly(1), Poly::monomial(-k));
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalise();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalise();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("rational function division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalise();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFunc::str() const {
    if (den_ == Poly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

CyclotomicSplit split_cyclotomic(const Poly& p, int max_k) {
    CyclotomicSplit s;
    if (p.is_zero()) {
        s.unit = 0;
        return s;
    }
    s.qpow = p.valuation();
    Poly r = p.shifted(-s.qpow);
    s.unit = r.leading();
    r = r.monic();
    for (int k = 1; k <= max_k && !r.is_constant(); ++k) {
        Poly phi = cyclotomic(k);
        int e = 0;
        for (;;) {
            Poly quo, rem;
            Poly::divmod(r, phi, quo, rem);
            if (!rem.is_zero()) break;
            r = quo;
            ++e;
        }
        if (e) s.phis.emplace_back(k, e);
    }
    s.residual = r;
    return s;
}

std::string RatFunc::factored() const {
    if (num_.is_zero()) return "0";
    CyclotomicSplit a = split_cyclotomic(num_);
    CyclotomicSplit b = split_cyclotomic(den_);
    Rational unit = a.unit / b.unit;
    int qp = a.qpow - b.qpow;
    std::map<int, int> phis;
    for (auto [k, e] : a.phis) phis[k] += e;
    for (auto [k, e] : b.phis) phis[k] -= e;

    std::ostringstream os;
    bool num_res = !a.residual.is_constant();
    bool den_res = !b.residual.is_constant();
    bool rest = num_res || den_res || qp != 0;
    for (auto& [k, e] : phis) rest = rest || e != 0;
    if (unit == -1 && rest)
        os << "-";
    else if (!rest)
        os << rational_str(unit);
    else if (unit != 1)
        os << (unit.get_den() == 1 ? rational_str(unit) : "(" + rational_str(unit) + ")");
    if (num_res) {
        os << "(" << a.residual.str() << ")";
    }
    if (qp != 0) {
        os << "q";
        if (qp != 1) os << "^" << qp;
    }
    for (auto& [k, e] : phis) {
        if (e == 0) continue;
        os << "Φ" << k;
        if (e != 1) os << "^" << e;
    }
    if (den_res) os << "(" << b.residual.str() << ")^-1";
    return os.str();
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
    // Newton divided differences
    size_t n = xs.size();
    std::vector<Rational> c = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            Rational dx = xs[i] - xs[i - j];
            if (dx == 0) throw std::invalid_argument("repeated interpolation node");
            c[i] = (c[i] - c[i - 1]) / dx;
        }
    Poly p;
    for (size_t i = n; i-- > 0;) {
        p *= Poly(std::vector<Rational>{-xs[i], Rational(1)});
        p += Poly(c[i]);
    }
    return p;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

}  // namespace isoc
