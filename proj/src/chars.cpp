#include "isoclinic/chars.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace isoc {

std::shared_ptr<const WeylData> WeylData::get(const std::string& label) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const WeylData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(label);
    if (it != cache.end()) return it->second;
    auto wd = std::make_shared<const WeylData>(label);
    cache.emplace(label, wd);
    return wd;
}

WeylData::WeylData(const std::string& label) : rs_(RootSystem::build(label)) {
    group_ = std::make_unique<WeylGroup>(rs_);
    classes_ = conjugacy_classes(*group_);
}

int CharacterTable::index(const std::string& key) const {
    for (int i = 0; i < size(); ++i)
        if (keys[i] == key) return i;
    throw std::invalid_argument("unknown irreducible: " + key);
}

// ---------------------------------------------------------------- type A

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 0; j < p[0]; ++j) {
        int k = 0;
        for (int x : p)
            if (x > j) ++k;
        c.push_back(k);
    }
    return c;
}

Partition cycle_type(const RootSystem& rs, const WeylElement& w) {
    if (rs.family() != 'A') throw std::invalid_argument("cycle type needs type A");
    int n = rs.rank() + 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int s : rs.reduced_word(w)) std::swap(perm[s - 1], perm[s]);
    std::vector<bool> seen(n, false);
    Partition ct;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        ct.push_back(len);
    }
    std::sort(ct.rbegin(), ct.rend());
    return ct;
}

namespace {

// rim hooks removed on the abacus: bead b moves to b - r
long mn_beta(std::vector<int> beta, const Partition& rho, size_t pos) {
    if (pos == rho.size()) return 1;
    int r = rho[pos];
    long total = 0;
    std::sort(beta.begin(), beta.end());
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i], t = b - r;
        if (t < 0 || std::binary_search(beta.begin(), beta.end(), t)) continue;
        int between = 0;
        for (int x : beta)
            if (x > t && x < b) ++between;
        std::vector<int> nb = beta;
        nb[i] = t;
        long v = mn_beta(nb, rho, pos + 1);
        total += (between % 2 ? -v : v);
    }
    return total;
}

}  // namespace

long murnaghan_nakayama(const Partition& lambda, const Partition& rho) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (n != std::accumulate(rho.begin(), rho.end(), 0)) throw std::invalid_argument("size mismatch");
    int k = static_cast<int>(lambda.size());
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);
    return mn_beta(beta, rho, 0);
}

// ------------------------------------------------------- Dixon-Schneider

namespace {

using u64 = std::uint64_t;
constexpr u64 kPrime = 2147483647ULL;  // 2^31 - 1

u64 md(long long x) {
    long long r = x % static_cast<long long>(kPrime);
    return static_cast<u64>(r < 0 ? r + static_cast<long long>(kPrime) : r);
}
u64 mul(u64 a, u64 b) { return a * b % kPrime; }
u64 add(u64 a, u64 b) { return (a + b) % kPrime; }
u64 sub(u64 a, u64 b) { return (a + kPrime - b) % kPrime; }
u64 pw(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}
u64 inv(u64 a) {
    if (a == 0) throw std::domain_error("inverse of 0 mod p");
    return pw(a, kPrime - 2);
}
long long lift(u64 a) { return a > kPrime / 2 ? static_cast<long long>(a) - static_cast<long long>(kPrime) : a; }

using ModMat = std::vector<std::vector<u64>>;

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(ModMat& m) {
    std::vector<int> piv;
    if (m.empty()) return piv;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        u64 iv = inv(m[r][c]);
        for (auto& x : m[r]) x = mul(x, iv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !m[i][c]) continue;
            u64 f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = sub(m[i][j], mul(f, m[r][j]));
        }
        piv.push_back(c);
        ++r;
    }
    m.resize(r);
    return piv;
}

// null space of a square matrix, rows are basis vectors
ModMat kernel(ModMat m) {
    int n = static_cast<int>(m.size());
    auto piv = rref(m);
    ModMat ker;
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<u64> v(n, 0);
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = sub(0, m[r][f]);
        ker.push_back(v);
    }
    return ker;
}

std::vector<u64> charpoly_mod(const ModMat& a) {
    // Faddeev-LeVerrier, k < p so every division is fine
    int n = static_cast<int>(a.size());
    ModMat m(n, std::vector<u64>(n, 0));
    std::vector<u64> c(n + 1, 0);
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        ModMat am(n, std::vector<u64>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) {
                if (!a[i][t]) continue;
                for (int j = 0; j < n; ++j) am[i][j] = add(am[i][j], mul(a[i][t], m[t][j]));
            }
        for (int i = 0; i < n; ++i) am[i][i] = add(am[i][i], c[n - k + 1]);
        m = std::move(am);
        u64 tr = 0;
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) tr = add(tr, mul(a[i][t], m[t][i]));
        c[n - k] = sub(0, mul(tr, inv(static_cast<u64>(k))));
    }
    return c;
}

}  // namespace

std::vector<std::vector<long>> dixon_schneider(const WeylData& wd) {
    const RootSystem& rs = wd.rs();
    const WeylGroup& g = wd.group();
    const auto& cc = wd.classes();
    int r = wd.num_classes();
    std::vector<std::vector<int>> members(r);
    for (size_t i = 0; i < g.size(); ++i) members[cc.class_of[i]].push_back(static_cast<int>(i));

    // a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
    std::vector<std::vector<std::vector<long>>> a(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
    for (int i = 0; i < r; ++i)
        for (int x : members[i]) {
            WeylElement xi = rs.inverse(g[x]);
            for (int k = 0; k < r; ++k) a[i][cc.class_of[g.index(rs.multiply(xi, cc.reps[k]))]][k]++;
        }

    std::vector<ModMat> spaces;
    {
        ModMat full(r, std::vector<u64>(r, 0));
        for (int i = 0; i < r; ++i) full[i][i] = 1;
        spaces.push_back(full);
    }
    for (int i = 0; i < r; ++i) {
        std::vector<ModMat> next;
        for (auto& basis : spaces) {
            int k = static_cast<int>(basis.size());
            if (k == 1) {
                next.push_back(basis);
                continue;
            }
            ModMat b = basis;
            auto piv = rref(b);
            // restriction of v -> M_i v to the span of b
            ModMat res(k, std::vector<u64>(k, 0));
            for (int s = 0; s < k; ++s) {
                std::vector<u64> img(r, 0);
                for (int j = 0; j < r; ++j) {
                    u64 acc = 0;
                    for (int kk = 0; kk < r; ++kk)
                        if (a[i][j][kk] && b[s][kk]) acc = add(acc, mul(md(a[i][j][kk]), b[s][kk]));
                    img[j] = acc;
                }
                for (int t = 0; t < k; ++t) res[t][s] = img[piv[t]];
            }
            auto cp = charpoly_mod(res);
            long bound = static_cast<long>(cc.sizes[i]);
            int found = 0;
            for (long lam = -bound; lam <= bound && found < k; ++lam) {
                u64 l = md(lam), v = 0;
                for (int t = k; t >= 0; --t) v = add(mul(v, l), cp[t]);
                if (v) continue;
                ModMat shifted = res;
                for (int t = 0; t < k; ++t) shifted[t][t] = sub(shifted[t][t], l);
                ModMat ker = kernel(shifted);
                ModMat sub_space;
                for (auto& coeffs : ker) {
                    std::vector<u64> vec(r, 0);
                    for (int t = 0; t < k; ++t)
                        if (coeffs[t])
                            for (int j = 0; j < r; ++j) vec[j] = add(vec[j], mul(coeffs[t], b[t][j]));
                    sub_space.push_back(vec);
                }
                found += static_cast<int>(sub_space.size());
                next.push_back(std::move(sub_space));
            }
            if (found != k) throw std::logic_error("class algebra eigenvalues are not integral");
        }
        spaces = std::move(next);
    }

    std::uint64_t order = g.size();
    std::vector<std::vector<long>> table;
    for (auto& sp : spaces) {
        if (sp.size() != 1) throw std::logic_error("class algebra did not split");
        auto v = sp[0];
        u64 n0 = inv(v[0]);
        for (auto& x : v) x = mul(x, n0);
        u64 s = 0;
        for (int k = 0; k < r; ++k) s = add(s, mul(mul(v[k], v[k]), inv(md(static_cast<long long>(cc.sizes[k])))));
        u64 d2 = mul(md(static_cast<long long>(order)), inv(s));
        long dim = -1;
        for (long d = 1; static_cast<std::uint64_t>(d * d) <= order; ++d)
            if (md(d * d) == d2) dim = d;
        if (dim < 0) throw std::logic_error("no integral degree found");
        std::vector<long> row(r);
        for (int k = 0; k < r; ++k) {
            long long x = lift(mul(mul(v[k], md(dim)), inv(md(static_cast<long long>(cc.sizes[k])))));
            if (x < -dim || x > dim) throw std::logic_error("character value out of range");
            row[k] = static_cast<long>(x);
        }
        table.push_back(row);
    }
    return table;
}

// ------------------------------------------------------------ the table

std::vector<Poly> fake_degrees(const WeylData& wd, const std::vector<std::vector<long>>& values) {
    const RootSystem& rs = wd.rs();
    const auto& cc = wd.classes();
    int r = wd.num_classes(), rank = rs.rank();
    std::vector<RatFunc> inv_det(r);
    for (int c = 0; c < r; ++c) {
        Poly cp = rs.reflection_char_poly(cc.reps[c]);
        std::vector<Rational> rev(rank + 1);
        for (int k = 0; k <= rank; ++k) rev[rank - k] = cp.coeff(k);
        inv_det[c] = RatFunc(Poly(1), Poly(rev));
    }
    Poly prod(1);
    for (int d : rs.degrees()) prod *= Poly(1) - Poly::monomial(d);
    std::vector<Poly> out;
    for (auto& row : values) {
        RatFunc s;
        for (int c = 0; c < r; ++c)
            if (row[c]) s += inv_det[c] * RatFunc(Rational(static_cast<long>(cc.sizes[c]) * row[c]));
        s *= RatFunc(Rational(1, static_cast<long>(rs.group_order())));
        s *= RatFunc(prod);
        if (!s.is_polynomial()) throw std::logic_error("fake degree is not a polynomial");
        Poly p = s.num() * Rational(1 / s.den().leading());
        for (auto& x : p.coeffs())
            if (x < 0 || x.get_den() != 1) throw std::logic_error("fake degree has a bad coefficient");
        out.push_back(p);
    }
    return out;
}

CharacterTable char_table(const WeylData& wd) {
    const RootSystem& rs = wd.rs();
    const auto& cc = wd.classes();
    int r = wd.num_classes();
    CharacterTable ct;
    std::vector<std::vector<long>> values;
    std::vector<Partition> parts;
    if (rs.family() == 'A') {
        int n = rs.rank() + 1;
        parts = partitions_of(n);
        std::vector<Partition> types;
        for (auto& rep : cc.reps) types.push_back(cycle_type(rs, rep));
        for (auto& lam : parts) {
            std::vector<long> row;
            for (auto& t : types) row.push_back(murnaghan_nakayama(lam, t));
            values.push_back(row);
        }
    } else {
        values = dixon_schneider(wd);
    }
    if (static_cast<int>(values.size()) != r) throw std::logic_error("character table is not square");
    auto fake = fake_degrees(wd, values);

    int c1 = wd.class_of(rs.generator(1));
    int c2 = wd.class_of(rs.from_word({1, rs.rank()}));
    std::vector<std::string> keys(r);
    for (int e = 0; e < r; ++e) {
        long dim = values[e][0];
        int b = fake[e].valuation();
        if (!parts.empty()) {
            keys[e] = partition_str(parts[e]);
            continue;
        }
        int same_db = 0, same_dbv = 0;
        for (int f = 0; f < r; ++f) {
            if (values[f][0] != dim || fake[f].valuation() != b) continue;
            ++same_db;
            if (values[f][c1] == values[e][c1]) ++same_dbv;
        }
        keys[e] = std::to_string(dim) + "_" + std::to_string(b);
        if (same_db > 1) {
            keys[e] += "[" + std::to_string(values[e][c1]);
            if (same_dbv > 1) keys[e] += "," + std::to_string(values[e][c2]);
            keys[e] += "]";
        }
    }
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    if (parts.empty())
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            auto kx = std::make_tuple(values[x][0], fake[x].valuation(), keys[x]);
            auto ky = std::make_tuple(values[y][0], fake[y].valuation(), keys[y]);
            return kx < ky;
        });
    for (int e : order) {
        ct.keys.push_back(keys[e]);
        ct.dims.push_back(static_cast<int>(values[e][0]));
        ct.b.push_back(fake[e].valuation());
        ct.values.push_back(values[e]);
        ct.fake_degrees.push_back(fake[e]);
        if (!parts.empty()) ct.partitions.push_back(parts[e]);
    }
    for (int e = 0; e < r; ++e)
        for (int f = e + 1; f < r; ++f)
            if (ct.keys[e] == ct.keys[f]) throw std::logic_error("ambiguous irrep key " + ct.keys[e]);
    return ct;
}

std::shared_ptr<const CharacterTable> char_table_cached(const std::string& label) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const CharacterTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(label);
        if (it != cache.end()) return it->second;
    }
    auto ct = std::make_shared<const CharacterTable>(char_table(*WeylData::get(label)));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(label, ct).first->second;
}

// ------------------------------------------------------------- traces

RatFunc SpringerTrace::value() const {
    if (coeff == 0) return RatFunc();
    return RatFunc(Rational(coeff)) * RatFunc::q_power(exponent);
}

SpringerTrace springer_trace(const WeylData& wd, const CharacterTable& ct, const Content& content,
                             int irrep, const WeylElement& w, const Slope& slope) {
    SpringerTrace t;
    WeylElement wd_pow = wd.rs().power(w, slope.d);
    t.coeff = ct.values.at(irrep)[wd.class_of(wd_pow)];
    if (t.coeff == 0) return t;
    long num = static_cast<long>(slope.d) * content.c;
    if (num % slope.m)
        throw std::logic_error("non-integral exponent " + std::to_string(num) + "/" + std::to_string(slope.m) +
                               " for irrep " + ct.keys.at(irrep));
    t.exponent = static_cast<int>(num / slope.m);
    return t;
}

SeminormalRep::SeminormalRep(const Partition& shape, const Rational& q0) {
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    // standard tableaux, recorded as row of each entry; fill entries 1..n in order
    std::vector<int> rows(n), fill(shape.size(), 0);
    std::function<void(int)> rec = [&](int e) {
        if (e == n) {
            tableaux_.push_back(rows);
            return;
        }
        for (size_t r = 0; r < shape.size(); ++r) {
            if (fill[r] >= shape[r] || (r > 0 && fill[r] >= fill[r - 1])) continue;
            rows[e] = static_cast<int>(r);
            ++fill[r];
            rec(e + 1);
            --fill[r];
        }
    };
    rec(0);
    std::map<std::vector<int>, int> index;
    for (size_t t = 0; t < tableaux_.size(); ++t) index[tableaux_[t]] = static_cast<int>(t);
    int dim = static_cast<int>(tableaux_.size());

    auto qpow = [&](int k) {
        Rational x = 1;
        for (int i = 0; i < std::abs(k); ++i) x *= q0;
        return k >= 0 ? x : Rational(1 / x);
    };
    for (int s = 1; s < n; ++s) {
        Matrix m(dim, std::vector<Rational>(dim, 0));
        for (int t = 0; t < dim; ++t) {
            const auto& rw = tableaux_[t];
            // column of entry e = number of smaller entries in its row
            auto col = [&](int e) {
                int c = 0;
                for (int f = 0; f < e; ++f)
                    if (rw[f] == rw[e]) ++c;
                return c;
            };
            int i = s - 1, j = s;
            if (rw[i] == rw[j]) {
                m[t][t] = q0;
            } else if (col(i) == col(j)) {
                m[t][t] = -1;
            } else {
                int r = (col(j) - rw[j]) - (col(i) - rw[i]);
                std::vector<int> sw = rw;
                std::swap(sw[i], sw[j]);
                int u = index.at(sw);
                Rational qa = qpow(r), qb = qpow(-r);
                Rational a = (q0 - 1) * qa / (qa - 1);
                Rational a2 = (q0 - 1) * qb / (qb - 1);
                m[t][t] = a;
                m[u][t] = r > 0 ? Rational(1) : Rational(a * a2 + q0);
            }
        }
        gens_.push_back(std::move(m));
    }
}

SeminormalRep::Matrix SeminormalRep::word(const BraidWord& w) const {
    int n = dim();
    Matrix p(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) p[i][i] = 1;
    for (int s : w) {
        const Matrix& g = generator(s);
        Matrix out(n, std::vector<Rational>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (p[i][k] == 0) continue;
                for (int j = 0; j < n; ++j)
                    if (g[k][j] != 0) out[i][j] += p[i][k] * g[k][j];
            }
        p = std::move(out);
    }
    return p;
}

Poly hecke_trace_typeA(const Partition& shape, int n, const BraidWord& word) {
    if (std::accumulate(shape.begin(), shape.end(), 0) != n) throw std::invalid_argument("shape size mismatch");
    for (int s : word)
        if (s < 1 || s >= n) throw std::invalid_argument("generator out of range");
    // the trace is a polynomial of degree <= length; two spare nodes check it
    int pts = static_cast<int>(word.size()) + 1;
    std::vector<Rational> xs, ys;
    for (int i = 0; i < pts + 2; ++i) {
        Rational q0 = i + 2;
        SeminormalRep rep(shape, q0);
        auto m = rep.word(word);
        Rational tr = 0;
        for (int k = 0; k < rep.dim(); ++k) tr += m[k][k];
        xs.push_back(q0);
        ys.push_back(tr);
    }
    Poly p = interpolate(std::vector<Rational>(xs.begin(), xs.begin() + pts),
                         std::vector<Rational>(ys.begin(), ys.begin() + pts));
    for (int i = pts; i < pts + 2; ++i)
        if (p.eval(xs[i]) != ys[i]) throw std::logic_error("Hecke trace is not a polynomial of the expected degree");
    if (!p.integral()) throw std::logic_error("Hecke trace has non-integral coefficients");
    return p;
}

}  // namespace isoc
