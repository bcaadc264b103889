#ifndef MMS_RESOLUTION_HPP
#define MMS_RESOLUTION_HPP

#include <string>
#include <vector>

#include "mms/diagram.hpp"
#include "mms/polynomial.hpp"

namespace mms
{

// Twists of the minimal resolution
//   0 -> ⊕_i S(-syz_i) -> ⊕_j S(-gen_j) -> I -> 0
// of a codimension-two staircase ideal. Both sequences are kept weakly
// decreasing.
struct DegreePair {
    std::vector<int> gen_degrees;
    std::vector<int> syz_degrees;

    friend bool operator==(const DegreePair &, const DegreePair &) = default;
};

// Generator degrees are inner-corner weights, syzygy degrees outer-corner
// weights. Throws DimensionError unless d is 2D, EmptyDiagram if d is empty.
DegreePair degree_pair(const Diagram &d);

// One more generator than syzygies, syz_i > gen_i >= gen_{i+1}, and equal
// sums. Sequences that are not weakly decreasing are rejected.
bool validate_pair(const DegreePair &p);

// The canonical staircase realizing a valid pair: the generator of degree
// a_1 sits at (0, a_1), each following corner moves right by b_i - a_i and
// down by b_i - a_{i+1}, ending at (a_s, 0). Throws InvalidPair.
Diagram staircase_from_pair(const DegreePair &p);

// Multiset difference (gen \ syz, syz \ gen), both sorted decreasing. The
// result has no value in common between its two sides.
DegreePair reduce_pair(const DegreePair &p);

bool r_equivalent(const Diagram &a, const Diagram &b);

// Dimension of the Hilbert scheme of P^{n+2} at the point of the structure
// on P^n with 2D diagram d. Equal-degree pairs count in both cross sums and
// diagonal pairs count in both subtracted sums.
Integer hilbert_scheme_dimension(const Diagram &d, int n);

// R and r agree (checked on every call); true iff both hold. Empty diagrams
// are only equivalent to each other.
bool same_component(const Diagram &a, const Diagram &b);

// "0 -> S(-6)^2 -> S(-5)^2 + S(-2) -> I -> 0".
std::string format_resolution(const DegreePair &p);

} // namespace mms

#endif
