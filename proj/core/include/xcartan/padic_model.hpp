#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace xcartan {

// Point of P^1 with a primitive integral representative (a : b),
// gcd(a,b) = 1 and the leading nonzero coordinate positive. Genuinely
// q-adic points are accepted through rational approximants truncated by the
// caller; precision beyond 2*(m + max pairwise multiplicity) digits does
// not change any of the outputs below.
struct P1Point {
    std::int64_t a;
    std::int64_t b;
    friend bool operator==(const P1Point&, const P1Point&) = default;
};

P1Point p1_normalize(std::int64_t a, std::int64_t b);

// Homothety class of a rank-2 lattice over the q-adic integers, i.e. a
// vertex of the (q+1)-regular Bruhat-Tits tree, i.e. an integral model of
// P^1 over Z_q. Canonical representative: column basis
//     [ q^a  c ]
//     [ 0   q^b ]   with 0 <= c < q^a and min(a, b, ord_q(c)) = 0;
// the overall q-power scale of the lattice is quotiented away during
// reduction. Equal classes compare equal field-wise.
class BTVertex {
  public:
    static BTVertex standard(std::int64_t q);  // the class of Z_q^2

    // Class of the Z_q-span of integer column vectors (at least two of them
    // spanning rank 2). Entries are 128-bit so callers can pass
    // un-normalized products.
    static BTVertex from_columns(std::int64_t q, const std::vector<std::array<__int128, 2>>& cols);

    std::int64_t q() const { return q_; }
    std::array<std::array<std::int64_t, 2>, 2> basis() const;

    // Tree distance (difference of elementary divisor exponents).
    int distance(const BTVertex& o) const;

    friend bool operator==(const BTVertex&, const BTVertex&) = default;
    friend bool operator<(const BTVertex& x, const BTVertex& y);

  private:
    BTVertex(std::int64_t q, int a, int b, std::int64_t c) : q_(q), a_(a), b_(b), c_(c) {}
    std::int64_t q_;
    int a_;
    int b_;
    std::int64_t c_;  // 0 <= c < q^a
};

// Intersection multiplicity of distinct x, y in the model given by v:
// ord_q(det[M^-1 x, M^-1 y]) with the transformed columns re-primitivized
// at q. Equals the tree distance from v to the geodesic between the ends x
// and y. Throws std::domain_error when x = y (infinite multiplicity) or
// when v does not live over q.
int p1_mult_in_model(const P1Point& x, const P1Point& y, const BTVertex& v, std::int64_t q);

// The unique model in which <x,z> = <y,z> = 0 and <x,y> = m, for pairwise
// distinct points and any m >= 0: built by walking from the median vertex
// of {x,y,z} exactly m steps toward the end z. The returned vertex is
// re-verified against these three postconditions before being handed back.
BTVertex find_model_vertex(const P1Point& x, const P1Point& y, const P1Point& z,
                           int m, std::int64_t q);

// Every vertex within the given tree distance of the standard vertex.
// Exhaustive-search oracle used by the verification suites.
std::vector<BTVertex> vertices_within(std::int64_t q, int radius);

}  // namespace xcartan
