#ifndef MMS_TESTS_SUPPORT_HPP
#define MMS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "mms/diagram.hpp"

namespace mms::testing
{

// Every partition of size 0..max_size, smallest first.
inline std::vector<Partition> partitions_up_to(int max_size)
{
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s) {
        auto ps = partitions_of(s);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

// Up to max_parts parts, each in 1..max_part.
inline Partition random_partition(std::mt19937 &rng, int max_parts, int max_part, bool allow_empty = true)
{
    std::uniform_int_distribution<int> count(allow_empty ? 0 : 1, max_parts);
    std::uniform_int_distribution<int> part(1, max_part);
    std::vector<int> parts(static_cast<std::size_t>(count(rng)));
    for (int &p : parts) {
        p = part(rng);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>{});
    return Partition(std::move(parts));
}

// Random Young diagram in dimension m grown by adding random inner corners.
inline Diagram random_diagram(std::mt19937 &rng, std::size_t m, int boxes)
{
    Diagram d(m);
    for (int k = 0; k < boxes; ++k) {
        const auto corners = inner_corners(d);
        std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
        auto it = corners.begin();
        std::advance(it, static_cast<long>(pick(rng)));
        d = thicken(d, {*it});
    }
    return d;
}

} // namespace mms::testing

#endif
