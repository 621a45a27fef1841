#include "support.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chiy::testsupport {

HodgeDiamond p2_diamond() { return HodgeDiamond::pure({1, 1, 1}); }

HodgeDiamond k3_diamond() {
    return HodgeDiamond(2, {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}});
}

HodgeDiamond enriques_diamond() { return HodgeDiamond::pure({1, 10, 1}); }

HodgeDiamond torus_diamond() { return HodgeDiamond(1, {{1, 1}, {1, 1}}); }

namespace {
ChernPolynomial mono(std::vector<int> parts, const Rational& coeff) {
    return ChernPolynomial::monomial(Partition(std::move(parts)), YPolynomial(coeff));
}
}  // namespace

ChernPolynomial printed_taylor(int n, int i) {
    if (n < 4) throw std::invalid_argument("printed_taylor: table needs n >= 4");
    long long N = n;
    ChernPolynomial out;
    switch (i) {
        case 0:
            out = mono({n}, 1);
            break;
        case 1:
            out = mono({n}, Rational(-N, 2));
            break;
        case 2:
            out = mono({n}, Rational(N * (3 * N - 5), 24)) + mono({n - 1, 1}, Rational(1, 12));
            break;
        case 3:
            out = mono({n}, Rational(-N * (N - 2) * (N - 3), 48)) +
                  mono({n - 1, 1}, Rational(-(N - 2), 24));
            break;
        case 4:
            out = mono({n}, Rational(N * (15 * N * N * N - 150 * N * N + 485 * N - 502), 5760)) +
                  mono({n - 1, 1}, Rational(4 * (15 * N * N - 85 * N + 108), 5760)) +
                  mono({n - 2, 1, 1}, Rational(8, 5760)) + mono({n - 2, 2}, Rational(24, 5760)) +
                  mono({n - 3, 1, 1, 1}, Rational(-8, 5760)) +
                  mono({n - 3, 2, 1}, Rational(24, 5760)) + mono({n - 3, 3}, Rational(-24, 5760));
            break;
        default:
            throw std::invalid_argument("printed_taylor: only a_0..a_4 are printed");
    }
    return out.set_grade(n);
}

ChernPolynomial printed_moment(int n, int m) {
    if (n < 4) throw std::invalid_argument("printed_moment: table needs n >= 4");
    long long N = n;
    ChernPolynomial out;
    switch (m) {
        case 0:
            out = mono({n}, 1);
            break;
        case 1:
            out = mono({n}, Rational(N, 2));
            break;
        case 2:
            out = mono({n}, Rational(N * (3 * N + 1), 12)) + mono({n - 1, 1}, Rational(1, 6));
            break;
        case 3:
            out = mono({n}, Rational(N * N * (N + 1), 8)) + mono({n - 1, 1}, Rational(N, 4));
            break;
        case 4:
            out = mono({n}, Rational(N * (15 * N * N * N + 30 * N * N + 5 * N - 2), 240)) +
                  mono({n - 1, 1}, Rational(15 * N * N + 5 * N - 2, 60)) +
                  mono({n - 2, 1, 1}, Rational(1, 30)) + mono({n - 2, 2}, Rational(3, 30)) +
                  mono({n - 3, 1, 1, 1}, Rational(-1, 30)) + mono({n - 3, 2, 1}, Rational(3, 30)) +
                  mono({n - 3, 3}, Rational(-3, 30));
            break;
        default:
            throw std::invalid_argument("printed_moment: only h(p^0)..h(p^4) are printed");
    }
    return out.set_grade(n);
}

namespace {

// orbit of (p,q) under the given symmetries, as a sorted set of cells
std::set<std::pair<int, int>> orbit(int n, int p, int q, bool mirror) {
    std::set<std::pair<int, int>> cells;
    std::vector<std::pair<int, int>> queue{{p, q}};
    while (!queue.empty()) {
        auto [a, b] = queue.back();
        queue.pop_back();
        if (!cells.insert({a, b}).second) continue;
        queue.push_back({b, a});
        queue.push_back({n - a, n - b});
        if (mirror) queue.push_back({a, n - b});
    }
    return cells;
}

HodgeDiamond assemble(int n, std::mt19937_64& rng, bool mirror, bool pure, bool force_offdiag) {
    std::vector<std::vector<long long>> rows(static_cast<size_t>(n) + 1,
                                             std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    std::set<std::pair<int, int>> seen;
    std::uniform_int_distribution<int> diag_value(1, 5);
    std::uniform_int_distribution<int> off_value(0, 3);
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            if (seen.count({p, q})) continue;
            auto cells = orbit(n, p, q, mirror);
            bool diagonal = false;
            for (auto [a, b] : cells) diagonal = diagonal || a == b;
            long long value;
            if (diagonal)
                value = diag_value(rng);
            else
                value = pure ? 0 : off_value(rng);
            for (auto [a, b] : cells) {
                rows[static_cast<size_t>(b)][static_cast<size_t>(a)] = value;
                seen.insert({a, b});
            }
        }
    }
    // keep the diagonal positive and plant an off-diagonal witness when asked
    for (int p = 0; p <= n; ++p) {
        if (rows[static_cast<size_t>(p)][static_cast<size_t>(p)] == 0) {
            for (auto [a, b] : orbit(n, p, p, mirror))
                rows[static_cast<size_t>(b)][static_cast<size_t>(a)] += 1;
        }
    }
    if (force_offdiag && n >= 1) {
        bool have = false;
        for (int p = 0; p <= n && !have; ++p)
            for (int q = 0; q <= n && !have; ++q) have = p != q && rows[static_cast<size_t>(q)][static_cast<size_t>(p)] != 0;
        if (!have) {
            for (auto [a, b] : orbit(n, 0, n, mirror))
                if (a != b) rows[static_cast<size_t>(b)][static_cast<size_t>(a)] += 1;
        }
    }
    return HodgeDiamond(n, std::move(rows));
}

}  // namespace

HodgeDiamond random_kaehler_diamond(std::mt19937_64& rng, int n, bool pure) {
    return assemble(n, rng, false, pure, !pure);
}

HodgeDiamond random_mirror_diamond(std::mt19937_64& rng, int n) {
    if (n % 2 != 0) throw std::invalid_argument("random_mirror_diamond: n must be even");
    return assemble(n, rng, true, false, false);
}

std::vector<Rational> elementary_values(const std::vector<Rational>& xs) {
    // coefficients of prod (1 + x_i t)
    std::vector<Rational> e(xs.size() + 1, Rational(0));
    e[0] = Rational(1);
    size_t used = 0;
    for (const Rational& x : xs) {
        ++used;
        for (size_t j = used; j >= 1; --j) e[j] += x * e[j - 1];
    }
    return std::vector<Rational>(e.begin() + 1, e.end());
}

}  // namespace chiy::testsupport
