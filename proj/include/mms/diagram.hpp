#ifndef MMS_DIAGRAM_HPP
#define MMS_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mms
{

// A unit box of a Young diagram, identified by its lower corner. Axis 0 is
// x (rightward), axis 1 is y (upward), axis 2 is z.
struct Box {
    std::vector<int> coords;

    Box() = default;
    explicit Box(std::vector<int> c);
    Box(std::initializer_list<int> c);

    std::size_t dim() const noexcept
    {
        return coords.size();
    }
    int operator[](std::size_t axis) const
    {
        return coords[axis];
    }

    friend auto operator<=>(const Box &, const Box &) = default;
    friend bool operator==(const Box &, const Box &) = default;
};

// Sum of the lower-corner coordinates; the degree of the box's monomial.
int box_weight(const Box &b) noexcept;

std::string to_string(const Box &b);

// Weakly decreasing sequence of positive integers. The empty partition is
// allowed and corresponds to the empty diagram.
class Partition
{
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Accepts "7,7,4,2", "[7,7,4,2]", "()" and "[]"; whitespace ignored.
    static Partition parse(std::string_view text);

    const std::vector<int> &parts() const noexcept
    {
        return m_parts;
    }
    std::size_t length() const noexcept
    {
        return m_parts.size();
    }
    bool empty() const noexcept
    {
        return m_parts.empty();
    }
    // Part j, or 0 past the end (implicit zero padding).
    int operator[](std::size_t j) const noexcept
    {
        return j < m_parts.size() ? m_parts[j] : 0;
    }
    int size() const noexcept;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<int> m_parts;
};

// "[7,7,4,2]"; the empty partition prints as "[]".
std::string to_string(const Partition &p);

// Finite set of boxes of a common dimension closed under decrementing any
// positive coordinate. Immutable once constructed.
class Diagram
{
public:
    using container = std::set<Box>;
    using const_iterator = container::const_iterator;

    // Empty diagram of the given dimension.
    explicit Diagram(std::size_t dim);
    // Throws InvalidDiagram if the boxes are not Young-closed or if any box
    // has the wrong dimension or a negative coordinate.
    Diagram(std::size_t dim, container boxes);

    std::size_t dim() const noexcept
    {
        return m_dim;
    }
    std::size_t size() const noexcept
    {
        return m_boxes.size();
    }
    bool empty() const noexcept
    {
        return m_boxes.empty();
    }
    bool contains(const Box &b) const
    {
        return m_boxes.count(b) != 0;
    }
    const container &boxes() const noexcept
    {
        return m_boxes;
    }
    const_iterator begin() const noexcept
    {
        return m_boxes.begin();
    }
    const_iterator end() const noexcept
    {
        return m_boxes.end();
    }
    // Largest box weight; -1 for the empty diagram.
    int max_weight() const noexcept;

    bool is_subset_of(const Diagram &other) const;

    friend bool operator==(const Diagram &, const Diagram &) = default;

private:
    std::size_t m_dim;
    container m_boxes;
};

bool is_young_closed(std::size_t dim, const Diagram::container &boxes);

Diagram partition_to_diagram(const Partition &p);
Partition diagram_to_partition(const Diagram &d);

// The conjugate partition: column heights of the diagram, left to right.
Partition conjugate(const Partition &p);

// All partitions of exactly `total`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int total);

Diagram diagram_union(const Diagram &a, const Diagram &b);
Diagram diagram_intersection(const Diagram &a, const Diagram &b);

// counts[k] = number of boxes of weight k, trailing zeros trimmed.
using DiagonalProfile = std::vector<int>;
DiagonalProfile diagonal_profile(const Diagram &d);

Diagram truncate_at_diagonal(const Diagram &d, int k);

std::set<Box> inner_corners(const Diagram &d);
std::set<Box> outer_corners(const Diagram &d);

Diagram thicken(const Diagram &d, const std::set<Box> &chosen);

Partition partition_sum(const Partition &a, const Partition &b);

// Boxes (i,j,k) with (i,j) in the diagram of mu and k < lam_j.
Diagram three_dim_diagram(const Partition &lam, const Partition &mu);

// Box b of the result has coords[t] = source.coords[perm[t]].
Diagram permute_axes(const Diagram &d, const std::vector<std::size_t> &perm);

// The 2D slices of a 3D diagram at z = 0, 1, ... as partitions.
std::vector<Partition> layers(const Diagram &d3);

} // namespace mms

#endif
