#include "zonotopal/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

#include "zonotopal/errors.hpp"

namespace zono {

std::string hf_str(const HilbertFunction& h) {
    std::ostringstream os;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) os << ' ';
        os << h[i];
    }
    return os.str();
}

long long hf_total(const HilbertFunction& h) {
    long long t = 0;
    for (long long x : h) t += x;
    return t;
}

std::size_t enumeration_guard() {
    if (const char* env = std::getenv("ZONOTOPAL_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 24;
}

TuttePoly& TuttePoly::operator+=(const TuttePoly& o) {
    for (const auto& [k, c] : o.coeffs) {
        coeffs[k] += c;
        if (coeffs[k] == 0) coeffs.erase(k);
    }
    return *this;
}

TuttePoly TuttePoly::shifted_x() const {
    TuttePoly p;
    for (const auto& [k, c] : coeffs) p.coeffs[{k.first + 1, k.second}] = c;
    return p;
}

TuttePoly TuttePoly::shifted_y() const {
    TuttePoly p;
    for (const auto& [k, c] : coeffs) p.coeffs[{k.first, k.second + 1}] = c;
    return p;
}

long long TuttePoly::eval(long long x, long long y) const {
    long long total = 0;
    for (const auto& [k, c] : coeffs) {
        long long term = c;
        for (int i = 0; i < k.first; ++i) term *= x;
        for (int j = 0; j < k.second; ++j) term *= y;
        total += term;
    }
    return total;
}

std::string TuttePoly::str() const {
    if (coeffs.empty()) return "0";
    // Sort by total degree descending, then x-degree descending.
    std::vector<std::pair<std::pair<int, int>, long long>> terms(coeffs.begin(), coeffs.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        long long a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        if (k.first > 0) mono += "x" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) mono += (mono.empty() ? "" : "*") + std::string("y") +
                                  (k.second > 1 ? "^" + std::to_string(k.second) : "");
        if (mono.empty()) os << a;
        else if (a == 1) os << mono;
        else os << a << mono;
    }
    return os.str();
}

Matroid::Matroid(std::vector<std::string> ground, Mat realization)
    : ground_(std::move(ground)), realization_(std::move(realization)) {
    if (realization_.cols() != ground_.size())
        throw Error("realization width does not match ground set");
    if (ground_.size() > 32) throw GroundTooLarge("ground sets beyond 32 elements are unsupported");
}

void Matroid::guard(std::size_t limit) const {
    if (n() > limit)
        throw GroundTooLarge("ground set of size " + std::to_string(n()) +
                             " exceeds the enumeration guard " + std::to_string(limit));
}

std::size_t Matroid::rank_of(std::uint32_t subset) const {
    {
        std::lock_guard<std::mutex> lk(memo_lock_);
        auto it = rank_memo_.find(subset);
        if (it != rank_memo_.end()) return it->second;
    }
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n(); ++i)
        if ((subset >> i) & 1u) cols.push_back(i);
    std::size_t r = rank(realization_.select_columns(cols));
    std::lock_guard<std::mutex> lk(memo_lock_);
    rank_memo_.emplace(subset, r);
    return r;
}

std::uint32_t Matroid::closure(std::uint32_t subset) const {
    std::size_t rs = rank_of(subset);
    std::uint32_t cl = subset;
    for (std::size_t e = 0; e < n(); ++e) {
        if ((subset >> e) & 1u) continue;
        if (rank_of(subset | (1u << e)) == rs) cl |= (1u << e);
    }
    return cl;
}

bool Matroid::loopless() const {
    for (std::size_t e = 0; e < n(); ++e)
        if (is_loop(e)) return false;
    return true;
}

std::vector<std::uint32_t> Matroid::circuits() const {
    guard(enumeration_guard());
    std::vector<std::uint32_t> out;
    std::uint32_t full = full_mask();
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::size_t size = static_cast<std::size_t>(std::popcount(s));
        if (rank_of(s) == size) continue; // independent
        bool minimal = true;
        for (std::size_t e = 0; e < n() && minimal; ++e) {
            if (!((s >> e) & 1u)) continue;
            std::uint32_t t = s & ~(1u << e);
            if (rank_of(t) < static_cast<std::size_t>(std::popcount(t))) minimal = false;
        }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [this](std::uint32_t a, std::uint32_t b) {
        std::vector<std::size_t> va, vb;
        for (std::size_t i = 0; i < n(); ++i) {
            if ((a >> i) & 1u) va.push_back(i);
            if ((b >> i) & 1u) vb.push_back(i);
        }
        return va < vb;
    });
    return out;
}

FlatLattice Matroid::flats() const {
    guard(16);
    std::uint32_t full = full_mask();
    std::vector<std::uint32_t> flats;
    {
        std::vector<bool> seen(static_cast<std::size_t>(full) + 1, false);
        for (std::uint32_t s = 0;; ++s) {
            std::uint32_t cl = closure(s);
            if (!seen[cl]) {
                seen[cl] = true;
                flats.push_back(cl);
            }
            if (s == full) break;
        }
    }
    std::sort(flats.begin(), flats.end());

    // Mobius to the top, by decreasing flat size.
    std::vector<std::uint32_t> by_size = flats;
    std::sort(by_size.begin(), by_size.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) > std::popcount(b);
    });
    std::map<std::uint32_t, long long> mu;
    for (std::uint32_t f : by_size) {
        if (f == full) {
            mu[f] = 1;
            continue;
        }
        long long s = 0;
        for (std::uint32_t g : flats)
            if (g != f && (g & f) == f) s += mu.at(g);
        mu[f] = -s;
    }
    return {std::move(flats), std::move(mu)};
}

SubsetCounts Matroid::counts() const {
    guard(enumeration_guard());
    SubsetCounts c;
    std::size_t r = rank();
    std::uint32_t full = full_mask();
    for (std::uint32_t s = 0;; ++s) {
        std::size_t size = static_cast<std::size_t>(std::popcount(s));
        std::size_t rk = rank_of(s);
        if (rk == size) ++c.independent;
        if (rk == r) {
            ++c.spanning;
            if (size == r) ++c.bases;
        }
        if (s == full) break;
    }
    return c;
}

namespace {

TuttePoly tutte_rec(const Matroid& m, std::uint32_t ground, std::uint32_t contracted,
                    std::map<std::pair<std::uint32_t, std::uint32_t>, TuttePoly>& memo) {
    auto key = std::make_pair(ground, contracted);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    TuttePoly result;
    if (ground == 0) {
        result.coeffs[{0, 0}] = 1;
    } else {
        std::uint32_t e = ground & (~ground + 1u); // lowest set bit
        std::uint32_t rest = ground & ~e;
        bool loop = m.rank_of(contracted | e) == m.rank_of(contracted);
        bool coloop =
            m.rank_of(ground | contracted) == m.rank_of(rest | contracted) + 1;
        if (loop) {
            result = tutte_rec(m, rest, contracted, memo).shifted_y();
        } else if (coloop) {
            result = tutte_rec(m, rest, contracted | e, memo).shifted_x();
        } else {
            result = tutte_rec(m, rest, contracted, memo);
            result += tutte_rec(m, rest, contracted | e, memo);
        }
    }
    memo.emplace(key, result);
    return result;
}

} // namespace

TuttePoly Matroid::tutte() const {
    guard(enumeration_guard());
    std::map<std::pair<std::uint32_t, std::uint32_t>, TuttePoly> memo;
    return tutte_rec(*this, full_mask(), 0, memo);
}

HilbertFunction Matroid::h_from_f(const std::vector<long long>& f, std::size_t d) const {
    // h(t) = sum_i f_{i-1} t^i (1-t)^{d-i}; f[i] counts faces of size i.
    std::vector<long long> h(d + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        // expand t^i (1-t)^{d-i}
        std::vector<long long> binom(d - i + 1);
        binom[0] = 1;
        for (std::size_t k = 1; k <= d - i; ++k)
            binom[k] = -binom[k - 1] * static_cast<long long>(d - i - k + 1) / static_cast<long long>(k);
        for (std::size_t k = 0; k + i <= d; ++k) h[i + k] += f[i] * binom[k];
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

HilbertFunction Matroid::broken_circuit_h_vector(const std::vector<std::size_t>& order) const {
    guard(enumeration_guard());
    if (!loopless()) throw LoopPresent("broken circuit complex requires a loopless matroid");
    if (order.size() != n()) throw Error("ordering must be a permutation of the ground set");
    std::vector<std::size_t> position(n(), n());
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (order[k] >= n() || position[order[k]] != n())
            throw Error("ordering must be a permutation of the ground set");
        position[order[k]] = k;
    }

    std::vector<std::uint32_t> broken;
    for (std::uint32_t c : circuits()) {
        std::size_t min_e = 0;
        std::size_t best = n();
        for (std::size_t e = 0; e < n(); ++e)
            if (((c >> e) & 1u) && position[e] < best) {
                best = position[e];
                min_e = e;
            }
        broken.push_back(c & ~(1u << min_e));
    }

    std::size_t d = rank();
    std::vector<long long> f(d + 1, 0);
    std::uint32_t full = full_mask();
    for (std::uint32_t s = 0;; ++s) {
        bool face = true;
        for (std::uint32_t b : broken)
            if ((s & b) == b) {
                face = false;
                break;
            }
        if (face) {
            std::size_t size = static_cast<std::size_t>(std::popcount(s));
            if (size <= d) ++f[size];
        }
        if (s == full) break;
    }
    return h_from_f(f, d);
}

HilbertFunction Matroid::independence_h_vector() const {
    guard(enumeration_guard());
    std::size_t d = rank();
    std::vector<long long> f(d + 1, 0);
    std::uint32_t full = full_mask();
    for (std::uint32_t s = 0;; ++s) {
        std::size_t size = static_cast<std::size_t>(std::popcount(s));
        if (size <= d && rank_of(s) == size) ++f[size];
        if (s == full) break;
    }
    return h_from_f(f, d);
}

Matroid matroid_of(const LinearSpace& a) { return Matroid(a.labels(), a.basis()); }

} // namespace zono
