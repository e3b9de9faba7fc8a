#include "isoclinic/braid.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace isoc {

Slope::Slope(int d_, int m_) : d(d_), m(m_) {
    if (d <= 0 || m <= 0) throw std::invalid_argument("slope needs positive d and m");
    if (std::gcd(d, m) != 1)
        throw std::invalid_argument("slope " + str() + " is not in lowest terms");
}

Slope Slope::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Slope(std::stoi(s), 1);
        return Slope(std::stoi(s.substr(0, slash)), std::stoi(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("bad slope: " + s);
    }
}

namespace {

// make u as large as possible: move left descents of v that are not right
// descents of u across the boundary
bool left_weight(const RootSystem& rs, WeylElement& u, WeylElement& v) {
    bool changed = false;
    for (int s = 1; s <= rs.rank();) {
        if (rs.is_left_descent(v, s) && !rs.is_right_descent(u, s)) {
            WeylElement g = rs.generator(s);
            u = rs.multiply(u, g);
            v = rs.multiply(g, v);
            changed = true;
            s = 1;
        } else {
            ++s;
        }
    }
    return changed;
}

}  // namespace

void check_word(const RootSystem& rs, const BraidWord& word) {
    for (int s : word)
        if (s < 1 || s > rs.rank())
            throw std::invalid_argument("generator " + std::to_string(s) + " out of range for " +
                                        rs.label());
}

GarsideNormalForm normal_form(const RootSystem& rs, const BraidWord& word) {
    check_word(rs, word);
    std::vector<WeylElement> f;
    for (int t : word) {
        f.push_back(rs.generator(t));
        for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i)
            if (!left_weight(rs, f[i], f[i + 1])) break;
        while (!f.empty() && f.back().length == 0) f.pop_back();
    }
    return {std::move(f)};
}

BraidWord flatten(const RootSystem& rs, const GarsideNormalForm& nf) {
    BraidWord w;
    for (auto& x : nf.simples) {
        auto r = rs.reduced_word(x);
        w.insert(w.end(), r.begin(), r.end());
    }
    return w;
}

BraidWord power(const BraidWord& word, int d) {
    if (d < 0) throw std::invalid_argument("negative braid power");
    BraidWord out;
    out.reserve(word.size() * d);
    for (int i = 0; i < d; ++i) out.insert(out.end(), word.begin(), word.end());
    return out;
}

BraidWord cyclic_shift(const BraidWord& word) {
    if (word.empty()) return word;
    BraidWord out(word.begin() + 1, word.end());
    out.push_back(word.front());
    return out;
}

bool braid_equal(const RootSystem& rs, const BraidWord& a, const BraidWord& b) {
    if (a.size() != b.size()) return false;
    return normal_form(rs, a).simples == normal_form(rs, b).simples;
}

bool contains_full_twist(const RootSystem& rs, const BraidWord& word) {
    auto nf = normal_form(rs, word);
    return nf.simples.size() >= 2 && nf.simples[0] == rs.longest() && nf.simples[1] == rs.longest();
}

BraidWord full_twist(const RootSystem& rs) { return power(rs.reduced_word(rs.longest()), 2); }

BraidWord parse_word(const std::string& s) {
    BraidWord w;
    std::string t;
    for (char c : s) {
        if (c == '[' || c == ']' || c == ' ') continue;
        t += c;
    }
    if (t.empty()) return w;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int g = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            w.push_back(g);
        } catch (...) {
            throw std::invalid_argument("bad braid word: " + s);
        }
    }
    return w;
}

std::string word_str(const BraidWord& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

std::vector<WeylElement> find_root_elements(const RootSystem& rs, int m, const RootSearchOptions& opt) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (m == 1) return {rs.identity()};
    int roots = rs.num_roots();
    if (roots % m) return {};
    int len = roots / m;
    if (len > rs.num_positive()) return {};

    // weak-order BFS up to the target length
    std::vector<WeylElement> level{rs.identity()};
    std::uint64_t examined = 1;
    for (int l = 0; l < len; ++l) {
        std::unordered_set<std::string> seen;
        std::vector<WeylElement> next;
        for (auto& x : level)
            for (int s = 1; s <= rs.rank(); ++s) {
                if (rs.is_right_descent(x, s)) continue;
                WeylElement y = rs.multiply(x, rs.generator(s));
                if (seen.insert(y.perm).second) {
                    next.push_back(std::move(y));
                    if (++examined > opt.budget)
                        throw std::runtime_error("root element search for m=" + std::to_string(m) +
                                                 " exceeds the enumeration budget");
                }
            }
        level = std::move(next);
    }

    BraidWord pi = full_twist(rs);
    auto pi_nf = normal_form(rs, pi).simples;
    std::vector<std::pair<std::vector<int>, WeylElement>> found;
    for (auto& w : level) {
        if (rs.order(w) != m) continue;
        auto word = rs.reduced_word(w);
        if (normal_form(rs, power(word, m)).simples != pi_nf) continue;
        found.emplace_back(word, w);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<WeylElement> out;
    for (auto& [word, w] : found) out.push_back(w);
    return out;
}

bool springer_chamber_check(const RootSystem& rs, const WeylElement& w, int m) {
    using C = std::complex<double>;
    int r = rs.rank();
    // w acts on the Cartan subalgebra by the inverse transpose of its root matrix
    IntMatrix inv = rs.matrix(rs.inverse(w));
    Eigen::MatrixXcd a(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a(i, j) = C(static_cast<double>(inv[j][i]), 0.0);
    C zeta = std::polar(1.0, 2 * std::numbers::pi / m);
    Eigen::MatrixXcd shifted = a - zeta * Eigen::MatrixXcd::Identity(r, r);
    Eigen::MatrixXcd ker;
    if (shifted.norm() < 1e-9) {
        ker = Eigen::MatrixXcd::Identity(r, r);  // the relative rank threshold breaks on 0
    } else {
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(shifted);
        lu.setThreshold(1e-9);
        if (lu.rank() == r) throw std::invalid_argument("element lacks the eigenvalue exp(2 pi i/m)");
        ker = lu.kernel();
    }

    const double eps = 1e-9;
    if (ker.cols() == 1) {
        // each root confines the phase of the scalar to an open half circle;
        // the half circles meet iff the values alpha(x) fit in an arc < pi
        std::vector<double> ang;
        for (int k = 0; k < rs.num_positive(); ++k) {
            C z = 0;
            for (int j = 0; j < r; ++j) z += static_cast<double>(rs.root(k)[j]) * ker(j, 0);
            if (std::abs(z) < eps) return false;
            ang.push_back(std::arg(z));
        }
        std::sort(ang.begin(), ang.end());
        double gap = ang.front() + 2 * std::numbers::pi - ang.back();
        for (size_t i = 1; i < ang.size(); ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
        return gap > std::numbers::pi + eps;
    }

    // Re alpha(x) only sees Re x, which ranges over the real span of the real
    // and imaginary parts of the kernel; ask whether that span meets the open
    // positive orthant (positivity on simple roots suffices) by Fourier-Motzkin.
    int k = static_cast<int>(ker.cols());
    std::vector<std::vector<double>> rows(r, std::vector<double>(2 * k));
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < k; ++c) {
            rows[i][2 * c] = ker(i, c).real();
            rows[i][2 * c + 1] = ker(i, c).imag();
        }
    for (int var = 0; var < 2 * k; ++var) {
        std::vector<std::vector<double>> pos, neg, keep;
        for (auto& row : rows) {
            if (row[var] > eps)
                pos.push_back(row);
            else if (row[var] < -eps)
                neg.push_back(row);
            else
                keep.push_back(row);
        }
        if (pos.empty() || neg.empty()) {
            rows = std::move(keep);
            continue;
        }
        for (auto& p : pos)
            for (auto& n : neg) {
                std::vector<double> c(2 * k);
                for (int t = 0; t < 2 * k; ++t) c[t] = -n[var] * p[t] + p[var] * n[t];
                double scale = 0;
                for (double x : c) scale = std::max(scale, std::abs(x));
                if (scale > 0)
                    for (double& x : c) x /= scale;
                c[var] = 0;
                keep.push_back(std::move(c));
            }
        rows = std::move(keep);
    }
    // every surviving row is (numerically) zero: 0 > 0 is infeasible
    return rows.empty();
}

WeylElement springer_element(const RootSystem& rs, int m) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, WeylElement> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({rs.label(), m});
        if (it != cache.end()) return it->second;
    }
    auto roots = find_root_elements(rs, m);
    if (roots.empty()) throw std::invalid_argument(std::to_string(m) + " is not a regular number for " + rs.label());
    WeylElement pick = roots.front();
    for (auto& w : roots) {
        bool ok = false;
        try {
            ok = springer_chamber_check(rs, w, m);
        } catch (const std::invalid_argument&) {
        }
        if (ok) {
            pick = w;
            break;
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(rs.label(), m), pick);
    return pick;
}

BraidWord springer_braid(const RootSystem& rs, const Slope& slope) {
    if (slope.m == 1) return power(full_twist(rs), slope.d);
    return power(rs.reduced_word(springer_element(rs, slope.m)), slope.d);
}

}  // namespace isoc
