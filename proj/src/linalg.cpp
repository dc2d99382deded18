#include "mgc/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mgc {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

template <class T>
T checked_mul(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, long long>) {
        long long out;
        if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
        return out;
    } else {
        return a * b;
    }
}

template <class T>
T checked_sub(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, long long>) {
        long long out;
        if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
        return out;
    } else {
        return a - b;
    }
}

template <class T>
T abs_value(const T& a) {
    return a < 0 ? T(-a) : a;
}

template <class T>
T gcd_value(T a, T b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        T t = a % b;
        a = b;
        b = t;
    }
    return a;
}

template <class T>
using Vec = std::vector<std::pair<int, T>>;

// v <- a*v - b*w, with a = lead(w), b = lead(v); both share the lead index.
template <class T>
Vec<T> eliminate(const Vec<T>& v, const Vec<T>& w) {
    const T a = w.front().second;
    const T b = v.front().second;
    Vec<T> out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.emplace_back(v[i].first, checked_mul(a, v[i].second));
            ++i;
        } else if (i == v.size() || w[j].first < v[i].first) {
            out.emplace_back(w[j].first, checked_sub(T(0), checked_mul(b, w[j].second)));
            ++j;
        } else {
            T x = checked_sub(checked_mul(a, v[i].second), checked_mul(b, w[j].second));
            if (x != 0) out.emplace_back(v[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    T content = 0;
    for (const auto& [k, x] : out) {
        content = gcd_value(content, x);
        if (content == 1) break;
    }
    if (content > 1)
        for (auto& [k, x] : out) x /= content;
    return out;
}

template <class T>
long long rank_over(const std::vector<SparseVector>& vectors) {
    std::map<int, Vec<T>> pivot;  // lead index -> reduced vector
    for (const auto& src : vectors) {
        Vec<T> v;
        v.reserve(src.size());
        for (const auto& [k, x] : src)
            if (x != 0) v.emplace_back(k, T(x));
        while (!v.empty()) {
            auto it = pivot.find(v.front().first);
            if (it == pivot.end()) {
                pivot.emplace(v.front().first, std::move(v));
                break;
            }
            v = eliminate(v, it->second);
        }
    }
    return static_cast<long long>(pivot.size());
}

std::uint32_t mod_of(long long x, std::uint32_t p) {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

using ModVec = std::vector<std::pair<int, std::uint32_t>>;

// v - c*w over F_p
ModVec axpy(const ModVec& v, std::uint32_t c, const ModVec& w, std::uint32_t p) {
    ModVec out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            out.emplace_back(w[j].first, (p - mul_mod(c, w[j].second, p)) % p);
            ++j;
        } else {
            const std::uint32_t x = (v[i].second + p - mul_mod(c, w[j].second, p)) % p;
            if (x != 0) out.emplace_back(v[i].first, x);
            ++i;
            ++j;
        }
    }
    return out;
}

void normalize(ModVec& v, std::uint32_t p) {
    const std::uint32_t inv = inverse_mod(v.front().second, p);
    for (auto& [k, x] : v) x = mul_mod(x, inv, p);
}

// Row echelon form keyed by lead index; rows normalized to lead 1.
std::map<int, ModVec> forward_echelon(const std::vector<SparseVector>& vectors, std::uint32_t p) {
    std::map<int, ModVec> pivot;
    for (const auto& src : vectors) {
        ModVec v;
        for (const auto& [k, x] : src) {
            const std::uint32_t y = mod_of(x, p);
            if (y != 0) v.emplace_back(k, y);
        }
        while (!v.empty()) {
            auto it = pivot.find(v.front().first);
            if (it == pivot.end()) {
                normalize(v, p);
                pivot.emplace(v.front().first, std::move(v));
                break;
            }
            v = axpy(v, v.front().second, it->second, p);
        }
    }
    return pivot;
}

}  // namespace

long long exact_rank(const std::vector<SparseVector>& vectors) {
    try {
        return rank_over<long long>(vectors);
    } catch (const Overflow&) {
        return rank_over<BigInt>(vectors);
    }
}

long long exact_rank(const SparseMatrix& m) { return exact_rank(m.columns); }

ModpEchelon modp_echelon(const std::vector<SparseVector>& vectors, std::uint32_t p) {
    auto pivot = forward_echelon(vectors, p);
    // back substitution, largest leads first, so each row is clean at later pivots
    for (auto it = pivot.rbegin(); it != pivot.rend(); ++it) {
        ModVec& v = it->second;
        ModVec done{v.front()};
        ModVec rest(v.begin() + 1, v.end());
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto pv = pivot.find(rest[pos].first);
            if (pv == pivot.end()) {
                done.push_back(rest[pos++]);
            } else {
                const ModVec tail(rest.begin() + static_cast<long>(pos), rest.end());
                rest = axpy(tail, tail.front().second, pv->second, p);
                pos = 0;
            }
        }
        v = std::move(done);
    }
    ModpEchelon e;
    e.p = p;
    for (auto& [lead, v] : pivot) {
        e.pivots.push_back(lead);
        e.rows.push_back(std::move(v));
    }
    return e;
}

long long rank_mod_p(const std::vector<SparseVector>& vectors, std::uint32_t p) {
    return static_cast<long long>(forward_echelon(vectors, p).size());
}

long long trace_on_span(const ModpEchelon& e, const SignedPermutationMatrix& sigma) {
    // coordinate of sigma(row_k) at pivot k: entries j of row_k with sigma(j) = pivot_k
    std::vector<int> preimage(sigma.size(), -1);
    for (int j = 0; j < sigma.size(); ++j) preimage[sigma.target[j]] = j;
    std::uint64_t t = 0;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        const int j = preimage[e.pivots[k]];
        const auto& row = e.rows[k];
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(j, 0u),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it == row.end() || it->first != j) continue;
        const std::uint32_t x = sigma.sign[j] > 0 ? it->second : (e.p - it->second) % e.p;
        t = (t + x) % e.p;
    }
    long long lifted = static_cast<long long>(t);
    if (lifted > static_cast<long long>(e.p / 2)) lifted -= e.p;
    return lifted;
}

}  // namespace mgc
