#include "isoclinic/rootweyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace isoc {

namespace {

std::string key_of(const std::vector<int>& v) {
    std::string k;
    for (int x : v) {
        k += std::to_string(x);
        k += ',';
    }
    return k;
}

}  // namespace

IntMatrix cartan_matrix(const std::string& label) {
    if (label.size() < 2) throw std::invalid_argument("bad root system label: " + label);
    char fam = label[0];
    int n = 0;
    try {
        n = std::stoi(label.substr(1));
    } catch (...) {
        throw std::invalid_argument("bad root system label: " + label);
    }
    if (fam == 'E' && (n == 7 || n == 8))
        throw std::invalid_argument(label +
                                    " is out of scope: its Weyl group exceeds desk-scale enumeration");
    IntMatrix c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    if (fam == 'A' && n >= 1 && n <= 6) {
        for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
        return c;
    }
    if (fam == 'G' && n == 2) {
        // first simple root long
        c[0][1] = -1;
        c[1][0] = -3;
        return c;
    }
    if (fam == 'F' && n == 4) {
        // first two simple roots long
        c[0][1] = c[1][0] = -1;
        c[1][2] = -1;
        c[2][1] = -2;
        c[2][3] = c[3][2] = -1;
        return c;
    }
    if (fam == 'E' && n == 6) {
        // Bourbaki numbering: 1-3-4-5-6 with 2 attached to 4
        auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
        link(1, 3);
        link(3, 4);
        link(4, 5);
        link(5, 6);
        link(2, 4);
        return c;
    }
    throw std::invalid_argument("unsupported root system: " + label +
                                " (supported: A1..A6, G2, F4, E6)");
}

RootSystem RootSystem::build(const std::string& label) {
    RootSystem rs;
    rs.label_ = label;
    rs.cartan_ = cartan_matrix(label);
    int r = rs.rank_ = static_cast<int>(rs.cartan_.size());

    // roots by closing the simple roots under simple reflections;
    // C[i][j] = <alpha_j, alpha_i^vee>
    auto reflect = [&](const std::vector<int>& b, int i) {
        long pair = 0;
        for (int j = 0; j < r; ++j) pair += rs.cartan_[i][j] * b[j];
        std::vector<int> out = b;
        out[i] -= static_cast<int>(pair);
        return out;
    };
    std::vector<std::vector<int>> all;
    std::unordered_set<std::string> seen;
    std::deque<std::vector<int>> todo;
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        all.push_back(e);
        seen.insert(key_of(e));
        todo.push_back(e);
    }
    while (!todo.empty()) {
        auto b = todo.front();
        todo.pop_front();
        for (int i = 0; i < r; ++i) {
            auto c = reflect(b, i);
            if (seen.insert(key_of(c)).second) {
                all.push_back(c);
                todo.push_back(c);
            }
        }
    }
    std::vector<std::vector<int>> pos;
    for (auto& a : all)
        if (std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; })) pos.push_back(a);
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.npos_ = static_cast<int>(pos.size());
    if (2 * pos.size() != all.size()) throw std::logic_error("root system not closed under negation");
    if (rs.num_roots() > 255) throw std::logic_error("too many roots");
    rs.roots_ = pos;
    for (auto& a : pos) {
        std::vector<int> m(r);
        for (int j = 0; j < r; ++j) m[j] = -a[j];
        rs.roots_.push_back(m);
    }
    for (int i = 0; i < rs.num_roots(); ++i) rs.root_lookup_[key_of(rs.roots_[i])] = i;
    rs.simple_.resize(r);
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        rs.simple_[i] = rs.root_index(e);
    }

    for (int i = 0; i < r; ++i) {
        WeylElement g;
        g.perm.resize(rs.num_roots());
        for (int k = 0; k < rs.num_roots(); ++k) {
            int img = rs.root_index(reflect(rs.roots_[k], i));
            if (img < 0) throw std::logic_error("reflection left the root system");
            g.perm[k] = static_cast<char>(img);
        }
        g.length = rs.count_length(g.perm);
        if (g.length != 1) throw std::logic_error("simple reflection of length != 1");
        rs.gens_.push_back(g);
    }

    WeylElement w = rs.identity();
    for (bool grew = true; grew;) {
        grew = false;
        for (int s = 1; s <= r; ++s)
            if (!rs.is_right_descent(w, s)) {
                w = rs.multiply(w, rs.generator(s));
                grew = true;
            }
    }
    rs.longest_ = w;
    if (w.length != rs.npos_) throw std::logic_error("longest element has wrong length");

    // |W| by orbit enumeration
    {
        std::unordered_set<std::string> el{rs.identity().perm};
        std::vector<WeylElement> frontier{rs.identity()};
        while (!frontier.empty()) {
            std::vector<WeylElement> next;
            for (auto& x : frontier)
                for (int s = 1; s <= r; ++s) {
                    if (rs.is_right_descent(x, s)) continue;
                    WeylElement y = rs.multiply(x, rs.generator(s));
                    if (el.insert(y.perm).second) next.push_back(std::move(y));
                }
            frontier = std::move(next);
        }
        rs.order_ = el.size();
    }

    // degrees from the eigenvalues of a Coxeter element
    std::vector<int> word(r);
    std::iota(word.begin(), word.end(), 1);
    WeylElement cox = rs.from_word(word);
    int h = rs.order(cox);
    Poly cp = rs.reflection_char_poly(cox);
    for (int k = 1; k <= h; ++k) {
        if (h % k) continue;
        Poly phi = cyclotomic(k);
        int mult = 0;
        for (;;) {
            Poly quo, rem;
            Poly::divmod(cp, phi, quo, rem);
            if (!rem.is_zero()) break;
            cp = quo;
            ++mult;
        }
        for (int j = 1; j <= k; ++j) {
            if (std::gcd(j, k) != 1) continue;
            for (int t = 0; t < mult; ++t) rs.degrees_.push_back(j * (h / k) + 1);
        }
    }
    std::sort(rs.degrees_.begin(), rs.degrees_.end());
    std::uint64_t prod = 1;
    int sum = 0;
    for (int d : rs.degrees_) {
        prod *= d;
        sum += d - 1;
    }
    if (static_cast<int>(rs.degrees_.size()) != r || prod != rs.order_ || sum != rs.npos_)
        throw std::logic_error("degree identities fail for " + label);
    if (rs.degrees_.back() != h) throw std::logic_error("Coxeter number mismatch");
    return rs;
}

int RootSystem::height(int i) const {
    return std::accumulate(roots_[i].begin(), roots_[i].end(), 0);
}

int RootSystem::root_index(const std::vector<int>& coords) const {
    auto it = root_lookup_.find(key_of(coords));
    return it == root_lookup_.end() ? -1 : it->second;
}

int RootSystem::count_length(const std::string& perm) const {
    int l = 0;
    for (int i = 0; i < npos_; ++i)
        if (static_cast<unsigned char>(perm[i]) >= npos_) ++l;
    return l;
}

WeylElement RootSystem::identity() const {
    WeylElement e;
    e.perm.resize(num_roots());
    for (int i = 0; i < num_roots(); ++i) e.perm[i] = static_cast<char>(i);
    e.length = 0;
    return e;
}

WeylElement RootSystem::generator(int s) const {
    if (s < 1 || s > rank_) throw std::out_of_range("generator index out of range");
    return gens_[s - 1];
}

WeylElement RootSystem::multiply(const WeylElement& u, const WeylElement& v) const {
    if (u.perm.size() != v.perm.size() || static_cast<int>(u.perm.size()) != num_roots())
        throw std::invalid_argument("elements from different root systems");
    WeylElement r;
    r.perm.resize(u.perm.size());
    for (size_t i = 0; i < u.perm.size(); ++i)
        r.perm[i] = u.perm[static_cast<unsigned char>(v.perm[i])];
    r.length = count_length(r.perm);
    return r;
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
    WeylElement r;
    r.perm.resize(w.perm.size());
    for (size_t i = 0; i < w.perm.size(); ++i)
        r.perm[static_cast<unsigned char>(w.perm[i])] = static_cast<char>(i);
    r.length = w.length;
    return r;
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
    WeylElement w = identity();
    for (int s : word) w = multiply(w, generator(s));
    return w;
}

WeylElement RootSystem::power(const WeylElement& w, long k) const {
    if (k < 0) return power(inverse(w), -k);
    WeylElement r = identity(), b = w;
    while (k) {
        if (k & 1) r = multiply(r, b);
        b = multiply(b, b);
        k >>= 1;
    }
    return r;
}

bool RootSystem::is_right_descent(const WeylElement& w, int s) const {
    return static_cast<unsigned char>(w.perm[simple(s)]) >= npos_;
}

bool RootSystem::is_left_descent(const WeylElement& w, int s) const {
    int target = simple(s);
    for (int j = 0; j < num_roots(); ++j)
        if (static_cast<unsigned char>(w.perm[j]) == target) return j >= npos_;
    throw std::logic_error("permutation is not surjective");
}

std::vector<int> RootSystem::left_descents(const WeylElement& w) const {
    std::vector<int> d;
    for (int s = 1; s <= rank_; ++s)
        if (is_left_descent(w, s)) d.push_back(s);
    return d;
}

std::vector<int> RootSystem::right_descents(const WeylElement& w) const {
    std::vector<int> d;
    for (int s = 1; s <= rank_; ++s)
        if (is_right_descent(w, s)) d.push_back(s);
    return d;
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
    std::vector<int> word;
    WeylElement x = w;
    while (x.length > 0) {
        int s = 1;
        while (!is_left_descent(x, s)) ++s;
        word.push_back(s);
        x = multiply(generator(s), x);
    }
    return word;
}

int RootSystem::order(const WeylElement& w) const {
    WeylElement x = w;
    int k = 1;
    while (x.length != 0) {
        x = multiply(x, w);
        ++k;
    }
    return k;
}

IntMatrix RootSystem::matrix(const WeylElement& w) const {
    IntMatrix m(rank_, std::vector<long>(rank_));
    for (int j = 0; j < rank_; ++j) {
        const auto& img = roots_[static_cast<unsigned char>(w.perm[simple_[j]])];
        for (int i = 0; i < rank_; ++i) m[i][j] = img[i];
    }
    return m;
}

Poly char_poly(const IntMatrix& a) {
    // Faddeev-LeVerrier
    int n = static_cast<int>(a.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    std::vector<Rational> c(n + 1, 0);
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int t = 0; t < n; ++t) s += a[i][t] * m[t][j];
                am[i][j] = s;
            }
        for (int i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
        m = am;
        Rational tr = 0;
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) tr += a[i][t] * m[t][i];
        c[n - k] = -tr / k;
    }
    return Poly(c);
}

long integer_rank(IntMatrix m) {
    int rows = static_cast<int>(m.size());
    if (!rows) return 0;
    int cols = static_cast<int>(m[0].size());
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m[i][j];
    long rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[rank][c];
            for (int j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

Poly RootSystem::reflection_char_poly(const WeylElement& w) const { return char_poly(matrix(w)); }

int RootSystem::fixed_space_dim(const WeylElement& w) const {
    IntMatrix m = matrix(w);
    for (int i = 0; i < rank_; ++i) m[i][i] -= 1;
    return rank_ - static_cast<int>(integer_rank(m));
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs) {
    if (rs.group_order() > 1000000) throw std::invalid_argument("group too large to enumerate");
    elems_.push_back(rs.identity());
    index_[elems_[0].perm] = 0;
    for (size_t head = 0; head < elems_.size(); ++head) {
        for (int s = 1; s <= rs.rank(); ++s) {
            if (rs.is_right_descent(elems_[head], s)) continue;
            WeylElement y = rs.multiply(elems_[head], rs.generator(s));
            if (index_.emplace(y.perm, static_cast<int>(elems_.size())).second) elems_.push_back(std::move(y));
        }
    }
    if (elems_.size() != rs.group_order()) throw std::logic_error("enumeration size mismatch");
}

int WeylGroup::index(const WeylElement& w) const {
    auto it = index_.find(w.perm);
    if (it == index_.end()) throw std::invalid_argument("element not in this group");
    return it->second;
}

ConjugacyClassSet conjugacy_classes(const WeylGroup& group) {
    const RootSystem& rs = group.root_system();
    size_t n = group.size();
    ConjugacyClassSet out;
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> members;
    for (size_t i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        int c = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<int> stack{static_cast<int>(i)};
        cls[i] = c;
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            members[c].push_back(j);
            for (int s = 1; s <= rs.rank(); ++s) {
                WeylElement g = rs.generator(s);
                int k = group.index(rs.multiply(rs.multiply(g, group[j]), g));
                if (cls[k] < 0) {
                    cls[k] = c;
                    stack.push_back(k);
                }
            }
        }
    }
    struct Info {
        std::vector<int> word;
        int elem;
        int old;
    };
    std::vector<Info> info;
    for (size_t c = 0; c < members.size(); ++c) {
        int min_len = 1 << 30;
        for (int j : members[c]) min_len = std::min(min_len, group[j].length);
        Info best{{}, -1, static_cast<int>(c)};
        for (int j : members[c]) {
            if (group[j].length != min_len) continue;
            auto w = rs.reduced_word(group[j]);
            if (best.elem < 0 || w < best.word) best = {w, j, static_cast<int>(c)};
        }
        info.push_back(best);
    }
    std::sort(info.begin(), info.end(), [](const Info& a, const Info& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
    std::vector<int> relabel(members.size());
    for (size_t c = 0; c < info.size(); ++c) {
        relabel[info[c].old] = static_cast<int>(c);
        out.reps.push_back(group[info[c].elem]);
        out.rep_words.push_back(info[c].word);
        out.sizes.push_back(members[info[c].old].size());
    }
    out.class_of.resize(n);
    for (size_t i = 0; i < n; ++i) out.class_of[i] = relabel[cls[i]];
    return out;
}

}  // namespace isoc
