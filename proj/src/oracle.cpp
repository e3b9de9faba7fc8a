#include "isoclinic/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "isoclinic/unipotent.hpp"

namespace isoc::oracle {

namespace {

int popcount(Mask m) {
    return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
           __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

Mask bit(int i) { return static_cast<Mask>(1) << i; }

}  // namespace

std::shared_ptr<const FlagSpace> FlagSpace::get(int n, int q) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const FlagSpace>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, q});
    if (it != cache.end()) return it->second;
    auto fs = std::make_shared<const FlagSpace>(n, q);
    cache.emplace(std::make_pair(n, q), fs);
    return fs;
}

FlagSpace::FlagSpace(int n, int q) : n_(n), q_(q) {
    if (q != 2 && q != 3) throw std::invalid_argument("oracle supports the prime fields F_2 and F_3");
    if (n < 1 || n > 4) throw std::invalid_argument("oracle supports 1 <= n <= 4");
    nvec_ = 1;
    for (int i = 0; i < n; ++i) nvec_ *= q;

    std::vector<std::vector<int>> add(nvec_, std::vector<int>(nvec_));
    std::vector<std::vector<int>> scal(q, std::vector<int>(nvec_));
    for (int a = 0; a < nvec_; ++a) {
        auto va = vec(a);
        for (int b = 0; b < nvec_; ++b) {
            auto vb = vec(b);
            for (int i = 0; i < n; ++i) vb[i] = (va[i] + vb[i]) % q;
            add[a][b] = vec_index(vb);
        }
        for (int c = 0; c < q; ++c) {
            auto v = va;
            for (auto& x : v) x = x * c % q;
            scal[c][a] = vec_index(v);
        }
    }
    auto span_with = [&](Mask sub, int v) {
        Mask out = 0;
        for (int a = 0; a < nvec_; ++a)
            if (sub & bit(a))
                for (int c = 0; c < q; ++c) out |= bit(add[a][scal[c][v]]);
        return out;
    };

    std::vector<Mask> chain;
    std::function<void(Mask, int)> rec = [&](Mask cur, int k) {
        if (k == n - 1) {
            flags_.push_back(chain);
            return;
        }
        std::vector<Mask> seen;
        for (int v = 0; v < nvec_; ++v) {
            if (cur & bit(v)) continue;
            Mask next = span_with(cur, v);
            if (std::find(seen.begin(), seen.end(), next) != seen.end()) continue;
            seen.push_back(next);
            chain.push_back(next);
            rec(next, k + 1);
            chain.pop_back();
        }
    };
    rec(bit(0), 0);

    // #flags = prod_i [i]_q
    long expect = 1;
    for (int i = 1; i <= n; ++i) {
        long qi = 0, p = 1;
        for (int j = 0; j < i; ++j, p *= q) qi += p;
        expect *= qi;
    }
    if (num_flags() != expect) throw std::logic_error("wrong number of flags");

    for (int f = 0; f < num_flags(); ++f) lookup_.emplace_back(flags_[f], f);
    std::sort(lookup_.begin(), lookup_.end());

    nbr_.assign(n - 1, std::vector<std::vector<int>>(num_flags()));
    for (int s = 1; s < n; ++s) {
        std::map<std::vector<Mask>, std::vector<int>> groups;
        for (int f = 0; f < num_flags(); ++f) {
            auto key = flags_[f];
            key[s - 1] = 0;
            groups[key].push_back(f);
        }
        for (auto& [key, members] : groups) {
            if (static_cast<int>(members.size()) != q + 1) throw std::logic_error("bad neighbour group");
            for (int f : members)
                for (int g : members)
                    if (f != g) nbr_[s - 1][f].push_back(g);
        }
    }
}

int FlagSpace::vec_index(const std::vector<int>& v) const {
    int idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * q_ + v[i];
    return idx;
}

std::vector<int> FlagSpace::vec(int idx) const {
    std::vector<int> v(n_);
    for (int i = 0; i < n_; ++i) {
        v[i] = idx % q_;
        idx /= q_;
    }
    return v;
}

int FlagSpace::dim_of(Mask m) const {
    int c = popcount(m), d = 0;
    while (c > 1) {
        c /= q_;
        ++d;
    }
    return d;
}

Perm FlagSpace::relative_position(int f, int g) const {
    auto step = [&](int fl, int i) -> Mask {
        if (i == 0) return bit(0);
        if (i == n_) return bit(nvec_) - 1;
        return flags_[fl][i - 1];
    };
    std::vector<std::vector<int>> r(n_ + 1, std::vector<int>(n_ + 1));
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j <= n_; ++j) r[i][j] = dim_of(step(f, i) & step(g, j));
    Perm w(n_, -1);
    for (int k = 1; k <= n_; ++k)
        for (int i = 1; i <= n_; ++i)
            if (r[i][k] - r[i - 1][k] - r[i][k - 1] + r[i - 1][k - 1] == 1) w[k - 1] = i - 1;
    for (int x : w)
        if (x < 0) throw std::logic_error("malformed flags");
    return w;
}

Mask FlagSpace::image(const Mat& g, Mask m) const {
    Mask out = 0;
    for (int a = 0; a < nvec_; ++a) {
        if (!(m & bit(a))) continue;
        auto v = vec(a);
        std::vector<int> w(n_, 0);
        for (int i = 0; i < n_; ++i) {
            int s = 0;
            for (int j = 0; j < n_; ++j) s += g[i][j] * v[j];
            w[i] = s % q_;
        }
        out |= bit(vec_index(w));
    }
    return out;
}

int FlagSpace::apply(const Mat& g, int f) const {
    std::vector<Mask> img;
    for (Mask m : flags_[f]) img.push_back(image(g, m));
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(img, -1));
    if (it == lookup_.end() || it->first != img) throw std::invalid_argument("matrix is not invertible");
    return it->second;
}

int perm_length(const Perm& w) {
    int l = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++l;
    return l;
}

std::vector<Perm> all_perms(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::int64_t chain_count(const FlagSpace& fs, const Mat& g, const std::vector<int>& word) {
    int nf = fs.num_flags();
    for (int s : word)
        if (s < 1 || s >= fs.n()) throw std::invalid_argument("generator out of range");
    std::vector<int> target(nf);
    for (int f = 0; f < nf; ++f) target[f] = fs.apply(g, f);
    std::int64_t total = 0;
    std::vector<std::int64_t> v(nf), next(nf);
    for (int start = 0; start < nf; ++start) {
        std::fill(v.begin(), v.end(), 0);
        v[start] = 1;
        for (int s : word) {
            std::fill(next.begin(), next.end(), 0);
            for (int f = 0; f < nf; ++f) {
                if (!v[f]) continue;
                for (int h : fs.neighbours(f, s)) next[h] += v[f];
            }
            std::swap(v, next);
        }
        total += v[target[start]];
        if (total < 0) throw std::overflow_error("chain count overflow");
    }
    return total;
}

namespace {

int rank_mod(Mat m, int q) {
    int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0, r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] % q) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        int inv = 1;
        while (m[r][c] * inv % q != 1) ++inv;
        for (auto& x : m[r]) x = x * inv % q;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] % q == 0) continue;
            int f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % q + q) % q;
        }
        ++r;
    }
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b, int q) {
    int n = static_cast<int>(a.size());
    Mat c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % q;
    return c;
}

Partition type_from_ranks(const std::vector<long>& ranks, int n) {
    // ranks[k] = rank of N^k, ranks[0] = n; blocks of size >= k: ranks[k-1] - ranks[k]
    Partition conj;
    for (size_t k = 1; k < ranks.size(); ++k) {
        long c = ranks[k - 1] - ranks[k];
        if (c > 0) conj.push_back(static_cast<int>(c));
    }
    Partition p = conjugate(conj);
    if (std::accumulate(p.begin(), p.end(), 0) != n) throw std::invalid_argument("matrix is not nilpotent");
    return p;
}

}  // namespace

Partition jordan_type(const Mat& u, int q) {
    int n = static_cast<int>(u.size());
    Mat nil = u;
    for (int i = 0; i < n; ++i) nil[i][i] = ((nil[i][i] - 1) % q + q) % q;
    std::vector<long> ranks{n};
    Mat p = nil;
    for (int k = 1; k <= n; ++k) {
        ranks.push_back(rank_mod(p, q));
        p = mat_mul(p, nil, q);
    }
    if (ranks.back() != 0) throw std::invalid_argument("matrix is not unipotent");
    return type_from_ranks(ranks, n);
}

Partition nilpotent_jordan_type(const IntMatrix& nil) {
    int n = static_cast<int>(nil.size());
    std::vector<long> ranks{n};
    IntMatrix p = nil;
    for (int k = 1; k <= n; ++k) {
        ranks.push_back(integer_rank(p));
        IntMatrix next(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t)
                if (p[i][t])
                    for (int j = 0; j < n; ++j) next[i][j] += p[i][t] * nil[t][j];
        p = std::move(next);
    }
    if (ranks.back() != 0) throw std::invalid_argument("matrix is not nilpotent");
    return type_from_ranks(ranks, n);
}

Mat jordan_matrix(const Partition& mu, int q) {
    int n = std::accumulate(mu.begin(), mu.end(), 0);
    Mat u(n, std::vector<int>(n, 0));
    int at = 0;
    for (int b : mu) {
        for (int i = 0; i < b; ++i) {
            u[at + i][at + i] = 1;
            if (i + 1 < b) u[at + i][at + i + 1] = 1 % q;
        }
        at += b;
    }
    return u;
}

Integer gl_order(int n, int q) {
    Integer r = 1;
    Integer qq = q;
    for (int i = 0; i < n * (n - 1) / 2; ++i) r *= qq;
    for (int i = 1; i <= n; ++i) {
        Integer p = 1;
        for (int j = 0; j < i; ++j) p *= qq;
        r *= p - 1;
    }
    return r;
}

bool class_size_enumerable(int n, int q) {
    long total = 1;
    for (int i = 0; i < n * n; ++i) total *= q;
    return total <= 100000;
}

std::int64_t class_size_enumerated(int n, int q, const Partition& mu) {
    static std::mutex m;
    static std::map<std::pair<int, int>, std::map<Partition, std::int64_t>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(n, q);
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (!class_size_enumerable(n, q)) throw std::invalid_argument("too many matrices to enumerate");
        std::map<Partition, std::int64_t> counts;
        long total = 1;
        for (int i = 0; i < n * n; ++i) total *= q;
        Mat u(n, std::vector<int>(n));
        for (long code = 0; code < total; ++code) {
            long c = code;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    u[i][j] = static_cast<int>(c % q);
                    c /= q;
                }
            // unipotent iff (u - 1)^n = 0
            Mat nil = u;
            for (int i = 0; i < n; ++i) nil[i][i] = (nil[i][i] + q - 1) % q;
            Mat p = nil;
            for (int k = 1; k < n; ++k) p = mat_mul(p, nil, q);
            bool zero = true;
            for (auto& row : p)
                for (int x : row) zero = zero && x == 0;
            if (zero) counts[jordan_type(u, q)]++;
        }
        it = cache.emplace(key, counts).first;
    }
    auto jt = it->second.find(mu);
    return jt == it->second.end() ? 0 : jt->second;
}

Rational stack_count_bruteforce(int n, int q, const std::vector<int>& word, const Partition& mu) {
    auto fs = FlagSpace::get(n, q);
    Integer size;
    if (class_size_enumerable(n, q)) {
        size = static_cast<long>(class_size_enumerated(n, q, mu));
    } else {
        Rational v = gl_class_size(mu).eval(q);
        size = v.get_num();
    }
    std::int64_t chains = chain_count(*fs, jordan_matrix(mu, q), word);
    Rational r(size * Integer(static_cast<long>(chains)), gl_order(n, q));
    r.canonicalize();
    return r;
}

}  // namespace isoc::oracle
