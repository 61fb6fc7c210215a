#include "xcartan/padic_model.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "xcartan/arith.hpp"

namespace xcartan {

namespace {

using i128 = __int128;

constexpr int kInfiniteOrd = 1 << 20;

int ordq(i128 n, std::int64_t q) {
    if (n == 0) return kInfiniteOrd;
    if (n < 0) n = -n;
    int v = 0;
    while (n % q == 0) {
        n /= q;
        ++v;
    }
    return v;
}

std::int64_t checked_q_pow(std::int64_t q, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r >= kMaxInput / q) throw std::domain_error("q-power out of range");
        r *= q;
    }
    return r;
}

i128 mul_checked(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice entry overflow");
    return r;
}

// x^-1 mod m for x coprime to m
std::int64_t inverse_mod(std::int64_t x, std::int64_t m) {
    std::int64_t a = ((x % m) + m) % m, b = m, u = 1, v = 0;
    while (b) {
        std::int64_t t = a / b;
        a -= t * b;
        std::swap(a, b);
        u -= t * v;
        std::swap(u, v);
    }
    return ((u % m) + m) % m;
}

void validate_q(std::int64_t q) {
    if (q < 2 || !is_prime(q)) throw std::domain_error("q must be prime");
}

}  // namespace

P1Point p1_normalize(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw std::domain_error("p1_normalize: (0,0) is not a point");
    std::int64_t g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    a /= g;
    b /= g;
    if ((a != 0 && a < 0) || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

BTVertex BTVertex::standard(std::int64_t q) {
    validate_q(q);
    return BTVertex(q, 0, 0, 0);
}

BTVertex BTVertex::from_columns(std::int64_t q,
                                const std::vector<std::array<i128, 2>>& cols_in) {
    validate_q(q);
    std::vector<std::array<i128, 2>> cols;
    for (const auto& c : cols_in)
        if (c[0] != 0 || c[1] != 0) cols.push_back(c);
    if (cols.size() < 2) throw std::domain_error("from_columns: rank 2 required");

    // w = column whose second coordinate has minimal q-valuation
    int b = kInfiniteOrd;
    std::size_t wi = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        int v = ordq(cols[i][1], q);
        if (v < b) {
            b = v;
            wi = i;
        }
    }
    if (b == kInfiniteOrd) throw std::domain_error("from_columns: rank 2 required");
    const std::array<i128, 2> w = cols[wi];
    const std::int64_t qb = checked_q_pow(q, b);
    const i128 u = w[1] / qb;  // q-unit

    // clear second coordinates of the rest; only q-structure matters, so
    // scaling a column by a q-unit is allowed
    int a = kInfiniteOrd;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i == wi) continue;
        i128 first;
        if (cols[i][1] == 0) {
            first = cols[i][0];
        } else {
            const int e = ordq(cols[i][1], q);
            const i128 mpart = cols[i][1] / checked_q_pow(q, e);
            first = mul_checked(u, cols[i][0]) -
                    mul_checked(mul_checked(mpart, checked_q_pow(q, e - b)), w[0]);
        }
        a = std::min(a, ordq(first, q));
    }
    if (a == kInfiniteOrd) throw std::domain_error("from_columns: rank 2 required");

    const std::int64_t qa = checked_q_pow(q, a);
    std::int64_t c = 0;
    if (qa > 1) {
        const std::int64_t ured = static_cast<std::int64_t>(((u % qa) + qa) % qa);
        const std::int64_t wred = static_cast<std::int64_t>(((w[0] % qa) + qa) % qa);
        c = static_cast<std::int64_t>(i128{wred} * inverse_mod(ured, qa) % qa);
    }
    // strip the homothety scale
    const int s = std::min({a, b, ordq(c, q)});
    const std::int64_t qs = checked_q_pow(q, s);
    return BTVertex(q, a - s, b - s, (c / qs) % checked_q_pow(q, a - s));
}

std::array<std::array<std::int64_t, 2>, 2> BTVertex::basis() const {
    return {{{checked_q_pow(q_, a_), c_}, {0, checked_q_pow(q_, b_)}}};
}

int BTVertex::distance(const BTVertex& o) const {
    if (q_ != o.q_) throw std::domain_error("distance: vertices over different primes");
    auto A = basis();
    auto B = o.basis();
    // N = adj(A) * B
    const i128 n00 = i128{A[1][1]} * B[0][0] - i128{A[0][1]} * B[1][0];
    const i128 n01 = i128{A[1][1]} * B[0][1] - i128{A[0][1]} * B[1][1];
    const i128 n10 = -i128{A[1][0]} * B[0][0] + i128{A[0][0]} * B[1][0];
    const i128 n11 = -i128{A[1][0]} * B[0][1] + i128{A[0][0]} * B[1][1];
    const i128 det = n00 * n11 - n01 * n10;
    const int v = std::min({ordq(n00, q_), ordq(n01, q_), ordq(n10, q_), ordq(n11, q_)});
    return ordq(det, q_) - 2 * v;
}

bool operator<(const BTVertex& x, const BTVertex& y) {
    return std::tie(x.q_, x.a_, x.b_, x.c_) < std::tie(y.q_, y.a_, y.b_, y.c_);
}

int p1_mult_in_model(const P1Point& x, const P1Point& y, const BTVertex& v, std::int64_t q) {
    validate_q(q);
    if (v.q() != q) throw std::domain_error("p1_mult_in_model: model prime mismatch");
    const P1Point xn = p1_normalize(x.a, x.b);
    const P1Point yn = p1_normalize(y.a, y.b);
    const i128 dxy = i128{xn.a} * yn.b - i128{xn.b} * yn.a;
    if (dxy == 0) throw std::domain_error("p1_mult_in_model: points coincide (infinite multiplicity)");
    auto M = v.basis();
    // multiplicity = ord det(M) + ord det[x,y] - ord(adj(M)x) - ord(adj(M)y):
    // the bilinearity of det moves the re-primitivization scalars out front
    const i128 ax0 = i128{M[1][1]} * xn.a - i128{M[0][1]} * xn.b;
    const i128 ax1 = -i128{M[1][0]} * xn.a + i128{M[0][0]} * xn.b;
    const i128 ay0 = i128{M[1][1]} * yn.a - i128{M[0][1]} * yn.b;
    const i128 ay1 = -i128{M[1][0]} * yn.a + i128{M[0][0]} * yn.b;
    const i128 detm = i128{M[0][0]} * M[1][1] - i128{M[0][1]} * M[1][0];
    const int s = std::min(ordq(ax0, q), ordq(ax1, q));
    const int r = std::min(ordq(ay0, q), ordq(ay1, q));
    return ordq(detm, q) + ordq(dxy, q) - s - r;
}

namespace {

// the unique vertex at multiplicity 0 from all three pairwise geodesics:
// columns (alpha x | beta y) where z = alpha x + beta y, up to q-units
BTVertex median_vertex(const P1Point& x, const P1Point& y, const P1Point& z, std::int64_t q) {
    const i128 dxy = i128{x.a} * y.b - i128{x.b} * y.a;
    const i128 dzy = i128{z.a} * y.b - i128{z.b} * y.a;
    const i128 dxz = i128{x.a} * z.b - i128{x.b} * z.a;
    int e = ordq(dzy, q) - ordq(dxy, q);
    int f = ordq(dxz, q) - ordq(dxy, q);
    const int shift = std::min(e, f);
    e -= shift;
    f -= shift;
    const i128 qe = checked_q_pow(q, e);
    const i128 qf = checked_q_pow(q, f);
    return BTVertex::from_columns(q, {{x.a * qe, x.b * qe}, {y.a * qf, y.b * qf}});
}

// one model, m steps from v toward the end z: (L ∩ line z) + q^m L
BTVertex walk_towards_end(const BTVertex& v, const P1Point& z, std::int64_t q, int m) {
    if (m == 0) return v;
    auto M = v.basis();
    i128 t0 = i128{M[1][1]} * z.a - i128{M[0][1]} * z.b;
    i128 t1 = -i128{M[1][0]} * z.a + i128{M[0][0]} * z.b;
    const int s = std::min(ordq(t0, q), ordq(t1, q));
    const i128 qs = checked_q_pow(q, s);
    t0 /= qs;
    t1 /= qs;
    const i128 z0 = mul_checked(M[0][0], t0) + mul_checked(M[0][1], t1);
    const i128 z1 = mul_checked(M[1][0], t0) + mul_checked(M[1][1], t1);
    const i128 qm = checked_q_pow(q, m);
    return BTVertex::from_columns(
        q, {{z0, z1}, {M[0][0] * qm, M[1][0] * qm}, {M[0][1] * qm, M[1][1] * qm}});
}

}  // namespace

BTVertex find_model_vertex(const P1Point& x, const P1Point& y, const P1Point& z,
                           int m, std::int64_t q) {
    validate_q(q);
    if (m < 0) throw std::domain_error("find_model_vertex: m must be >= 0");
    const P1Point xn = p1_normalize(x.a, x.b);
    const P1Point yn = p1_normalize(y.a, y.b);
    const P1Point zn = p1_normalize(z.a, z.b);
    if (xn == yn || xn == zn || yn == zn)
        throw std::domain_error("find_model_vertex: points must be pairwise distinct");
    BTVertex v = walk_towards_end(median_vertex(xn, yn, zn, q), zn, q, m);
    // the construction is validated against its own contract before returning
    if (p1_mult_in_model(xn, zn, v, q) != 0 || p1_mult_in_model(yn, zn, v, q) != 0 ||
        p1_mult_in_model(xn, yn, v, q) != m)
        throw std::logic_error("find_model_vertex: postcondition check failed");
    return v;
}

std::vector<BTVertex> vertices_within(std::int64_t q, int radius) {
    validate_q(q);
    if (radius < 0 || radius > 40) throw std::domain_error("vertices_within: bad radius");
    std::set<BTVertex> out;
    const BTVertex v0 = BTVertex::standard(q);
    for (int a = 0; a <= radius; ++a) {
        for (int b = 0; a + b <= radius; ++b) {
            const std::int64_t qa = checked_q_pow(q, a);
            for (std::int64_t c = 0; c < qa; ++c) {
                BTVertex v = BTVertex::from_columns(
                    q, {{qa, 0}, {c, checked_q_pow(q, b)}});
                if (v0.distance(v) <= radius) out.insert(v);
            }
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace xcartan
