#pragma once

// Test-side reference implementations. They work directly on permutation
// arrays and dictionaries of basis tensors, sharing no code with the library
// algorithms they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "chordlab/chord.hpp"
#include "chordlab/tqft.hpp"

namespace oracle {

using Rational = chordlab::Rational;

struct Perms {
    std::vector<int> pairing;
    std::vector<int> next;
};

inline bool connected(const Perms& g) {
    const int n = static_cast<int>(g.pairing.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int h = stack.back();
        stack.pop_back();
        for (int x : {g.pairing[h], g.next[h]}) {
            if (!seen[x]) {
                seen[x] = 1;
                ++count;
                stack.push_back(x);
            }
        }
    }
    return count == n;
}

/// Random connected rotation system with every vertex of valence >= 3.
inline Perms random_fat_graph(std::mt19937_64& rng, int edges) {
    const int n = 2 * edges;
    for (;;) {
        std::vector<int> valences;
        int left = n;
        while (left > 0) {
            if (left < 6) {
                valences.push_back(left);
                break;
            }
            const int v = std::uniform_int_distribution<int>(3, std::min(left - 3, 6))(rng);
            valences.push_back(v);
            left -= v;
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        Perms g{std::vector<int>(n), std::vector<int>(n)};
        int at = 0;
        for (int v : valences) {
            for (int i = 0; i < v; ++i) g.next[order[at + i]] = order[at + (i + 1) % v];
            at += v;
        }
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 0; i < n; i += 2) {
            g.pairing[order[i]] = order[i + 1];
            g.pairing[order[i + 1]] = order[i];
        }
        if (connected(g)) return g;
    }
}

inline int orbit_count(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int count = 0;
    for (std::size_t h = 0; h < perm.size(); ++h) {
        if (seen[h]) continue;
        ++count;
        for (int x = static_cast<int>(h); !seen[x]; x = perm[x]) seen[x] = 1;
    }
    return count;
}

/// Orbits of "cross the edge, then turn to the next half-edge at the vertex".
inline std::vector<std::vector<int>> boundary_orbits(const Perms& g) {
    const int n = static_cast<int>(g.pairing.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int h = 0; h < n; ++h) {
        if (seen[h]) continue;
        out.emplace_back();
        for (int x = h; !seen[x]; x = g.next[g.pairing[x]]) {
            seen[x] = 1;
            out.back().push_back(x);
        }
    }
    return out;
}

struct Surface {
    int vertices = 0;
    int edges = 0;
    int boundaries = 0;
    int twice_genus = 0;
};

inline Surface surface(const Perms& g) {
    Surface s;
    s.vertices = orbit_count(g.next);
    s.edges = static_cast<int>(g.pairing.size()) / 2;
    s.boundaries = static_cast<int>(boundary_orbits(g).size());
    s.twice_genus = 2 - s.vertices + s.edges - s.boundaries;
    return s;
}

inline Perms perms(const chordlab::FatGraph& g) { return {g.pairing(), g.next_at_vertex()}; }

/// (g; p, q) from counts alone: p is declared, q is every other boundary cycle.
inline chordlab::TopType chord_type(const chordlab::ChordDiagram& c) {
    const Surface s = surface(perms(c.graph()));
    return {s.twice_genus / 2, c.incoming_count(), s.boundaries - c.incoming_count()};
}

/// Exhaustive backtracking search for a bijection intertwining both
/// permutations and (optionally) a per-half-edge color.
inline bool isomorphic(const Perms& a, const Perms& b, const std::vector<int>& color_a = {},
                       const std::vector<int>& color_b = {}) {
    const int n = static_cast<int>(a.pairing.size());
    if (n != static_cast<int>(b.pairing.size())) return false;
    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(int)> extend = [&](int h) -> bool {
        if (h == n) return true;
        if (map[h] >= 0) return extend(h + 1);
        for (int y = 0; y < n; ++y) {
            if (used[y]) continue;
            if (!color_a.empty() && color_a[h] != color_b[y]) continue;
            std::vector<int> assigned;
            bool ok = true;
            std::vector<std::pair<int, int>> todo{{h, y}};
            while (!todo.empty() && ok) {
                auto [x, z] = todo.back();
                todo.pop_back();
                if (map[x] == z) continue;
                if (map[x] >= 0 || used[z] || (!color_a.empty() && color_a[x] != color_b[z])) {
                    ok = false;
                    break;
                }
                map[x] = z;
                used[z] = 1;
                assigned.push_back(x);
                todo.push_back({a.pairing[x], b.pairing[z]});
                todo.push_back({a.next[x], b.next[z]});
            }
            if (ok && extend(h + 1)) return true;
            for (int x : assigned) {
                used[map[x]] = 0;
                map[x] = -1;
            }
        }
        return false;
    };
    return extend(0);
}

// ---- algebra by dictionaries -------------------------------------------

using Tensor = std::map<std::vector<int>, Rational>;

struct Algebra {
    int dim = 0;
    // product[i][j] and coproduct[i] as sparse dictionaries.
    std::vector<std::vector<std::map<int, Rational>>> product;
    std::vector<std::map<std::pair<int, int>, Rational>> coproduct;
    std::vector<Rational> unit;
};

inline Algebra from_library(const chordlab::FrobeniusAlgebra& a) {
    Algebra o;
    o.dim = a.dimension();
    const int d = o.dim;
    o.product.assign(d, std::vector<std::map<int, Rational>>(d));
    o.coproduct.assign(d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const Rational x = a.product.at(k, i * d + j).value();
                if (x != 0) o.product[i][j][k] = x;
                const Rational y = a.coproduct.at(j * d + k, i).value();
                if (y != 0) o.coproduct[i][{j, k}] = y;
            }
    for (int i = 0; i < d; ++i) o.unit.push_back(a.unit.at(i, 0).value());
    return o;
}

inline void add(Tensor& t, const std::vector<int>& key, const Rational& x) {
    if (x == 0) return;
    auto [it, fresh] = t.emplace(key, x);
    if (!fresh) {
        it->second += x;
        if (it->second == 0) t.erase(it);
    }
}

/// Multiplies tensor factors `at` and `at + 1` together.
inline Tensor multiply_at(const Algebra& a, const Tensor& t, std::size_t at) {
    Tensor out;
    for (const auto& [key, x] : t) {
        for (const auto& [k, c] : a.product[key[at]][key[at + 1]]) {
            std::vector<int> next(key.begin(), key.begin() + at);
            next.push_back(k);
            next.insert(next.end(), key.begin() + at + 2, key.end());
            add(out, next, x * c);
        }
    }
    return out;
}

/// Applies the coproduct to tensor factor `at`.
inline Tensor split_at(const Algebra& a, const Tensor& t, std::size_t at) {
    Tensor out;
    for (const auto& [key, x] : t) {
        for (const auto& [jk, c] : a.coproduct[key[at]]) {
            std::vector<int> next(key.begin(), key.begin() + at);
            next.push_back(jk.first);
            next.push_back(jk.second);
            next.insert(next.end(), key.begin() + at + 1, key.end());
            add(out, next, x * c);
        }
    }
    return out;
}

/// Genus-g operation from p to q circles, evaluated basis tensor by basis
/// tensor: multiply everything down to one factor (the unit when p = 0),
/// apply m(Delta(-)) g times, then split off q - 1 factors.
inline std::vector<std::vector<Rational>> operation(const Algebra& a, int p, int q, int g) {
    const int d = a.dim;
    int cols = 1, rows = 1;
    for (int i = 0; i < p; ++i) cols *= d;
    for (int i = 0; i < q; ++i) rows *= d;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, Rational(0)));
    for (int col = 0; col < cols; ++col) {
        Tensor t;
        if (p == 0) {
            for (int i = 0; i < d; ++i) add(t, {i}, a.unit[i]);
        } else {
            std::vector<int> key(p);
            for (int i = p - 1, c = col; i >= 0; --i, c /= d) key[i] = c % d;
            t[key] = 1;
            for (int i = 1; i < p; ++i) t = multiply_at(a, t, 0);
        }
        for (int i = 0; i < g; ++i) t = multiply_at(a, split_at(a, t, 0), 0);
        for (int i = 1; i < q; ++i) t = split_at(a, t, static_cast<std::size_t>(i - 1));
        for (const auto& [key, x] : t) {
            int row = 0;
            for (int k : key) row = row * d + k;
            m[row][col] = x;
        }
    }
    return m;
}

inline Tensor basis(std::vector<int> key) { return Tensor{{std::move(key), Rational(1)}}; }

/// Frobenius-without-counit axioms checked elementwise on basis tensors.
inline bool axioms_hold(const Algebra& a) {
    const int d = a.dim;
    Tensor unit;
    for (int i = 0; i < d; ++i) add(unit, {i}, a.unit[i]);
    for (int i = 0; i < d; ++i) {
        Tensor left, right;
        for (const auto& [key, x] : unit) add(left, {key[0], i}, x);
        for (const auto& [key, x] : unit) add(right, {i, key[0]}, x);
        if (multiply_at(a, left, 0) != basis({i}) || multiply_at(a, right, 0) != basis({i})) return false;
        if (split_at(a, split_at(a, basis({i}), 0), 0) != split_at(a, split_at(a, basis({i}), 0), 1)) return false;
        Tensor swapped;
        for (const auto& [key, x] : split_at(a, basis({i}), 0)) add(swapped, {key[1], key[0]}, x);
        if (swapped != split_at(a, basis({i}), 0)) return false;
        for (int j = 0; j < d; ++j) {
            if (multiply_at(a, basis({i, j}), 0) != multiply_at(a, basis({j, i}), 0)) return false;
            // Delta(ab) = (a (x) 1) Delta(b) = Delta(a) (1 (x) b)
            const Tensor lhs = split_at(a, multiply_at(a, basis({i, j}), 0), 0);
            const Tensor module_left = multiply_at(a, split_at(a, basis({i, j}), 1), 0);
            const Tensor module_right = multiply_at(a, split_at(a, basis({i, j}), 0), 1);
            if (lhs != module_left || lhs != module_right) return false;
            for (int k = 0; k < d; ++k)
                if (multiply_at(a, multiply_at(a, basis({i, j, k}), 0), 0) !=
                    multiply_at(a, multiply_at(a, basis({i, j, k}), 1), 0))
                    return false;
        }
    }
    return true;
}

inline std::int64_t reduce(const Rational& x, std::int64_t p) {
    using boost::multiprecision::cpp_int;
    const cpp_int num = boost::multiprecision::numerator(x), den = boost::multiprecision::denominator(x);
    std::int64_t n = static_cast<std::int64_t>(((num % p) + p) % p);
    std::int64_t dd = static_cast<std::int64_t>(((den % p) + p) % p);
    std::int64_t inv = 1;
    for (std::int64_t e = p - 2, b = dd; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) inv = inv * b % p;
    return n * inv % p;
}

/// All counits over F_p by enumeration: theta with (theta (x) id)Delta = id
/// and (id (x) theta)Delta = id.
inline std::vector<std::vector<std::int64_t>> counits_mod(const Algebra& a, std::int64_t p) {
    const int d = a.dim;
    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t> theta(d, 0);
    for (;;) {
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            std::vector<std::int64_t> left(d, 0), right(d, 0);
            for (const auto& [jk, c] : a.coproduct[i]) {
                const std::int64_t cc = reduce(c, p);
                left[jk.second] = (left[jk.second] + theta[jk.first] * cc) % p;
                right[jk.first] = (right[jk.first] + theta[jk.second] * cc) % p;
            }
            for (int k = 0; k < d; ++k)
                if (left[k] != (k == i ? 1 : 0) || right[k] != (k == i ? 1 : 0)) ok = false;
        }
        if (ok) found.push_back(theta);
        int pos = 0;
        while (pos < d && ++theta[pos] == p) theta[pos++] = 0;
        if (pos == d) break;
    }
    return found;
}

}  // namespace oracle
