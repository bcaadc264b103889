#include "mms/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "mms/errors.hpp"

namespace mms
{

Box::Box(std::vector<int> c) : coords(std::move(c)) {}

Box::Box(std::initializer_list<int> c) : coords(c) {}

int box_weight(const Box &b) noexcept
{
    return std::accumulate(b.coords.begin(), b.coords.end(), 0);
}

std::string to_string(const Box &b)
{
    std::string out = "(";
    for (std::size_t t = 0; t < b.coords.size(); ++t) {
        if (t != 0) {
            out += ',';
        }
        out += std::to_string(b.coords[t]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : m_parts(std::move(parts))
{
    for (std::size_t j = 0; j < m_parts.size(); ++j) {
        if (m_parts[j] <= 0) {
            throw InvalidPartition("partition parts must be positive, got " + std::to_string(m_parts[j]));
        }
        if (j > 0 && m_parts[j] > m_parts[j - 1]) {
            throw InvalidPartition("partition parts must be weakly decreasing");
        }
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')'))) {
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    if (s.empty()) {
        return Partition{};
    }
    std::size_t pos = 0;
    while (true) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
        if (ec != std::errc{} || ptr == s.data() + pos) {
            throw ParseError("expected a positive integer in partition '" + std::string(text) + "'", pos);
        }
        parts.push_back(value);
        pos = static_cast<std::size_t>(ptr - s.data());
        if (pos == s.size()) {
            break;
        }
        if (s[pos] != ',') {
            throw ParseError("expected ',' in partition '" + std::string(text) + "'", pos);
        }
        ++pos;
    }
    return Partition(std::move(parts));
}

int Partition::size() const noexcept
{
    return std::accumulate(m_parts.begin(), m_parts.end(), 0);
}

std::string to_string(const Partition &p)
{
    std::string out = "[";
    for (std::size_t j = 0; j < p.length(); ++j) {
        if (j != 0) {
            out += ',';
        }
        out += std::to_string(p.parts()[j]);
    }
    return out + "]";
}

Partition conjugate(const Partition &p)
{
    std::vector<int> cols;
    if (p.empty()) {
        return Partition{};
    }
    for (int i = 0; i < p.parts().front(); ++i) {
        int height = 0;
        while (p[static_cast<std::size_t>(height)] > i) {
            ++height;
        }
        cols.push_back(height);
    }
    return Partition(std::move(cols));
}

std::vector<Partition> partitions_of(int total)
{
    std::vector<Partition> out;
    if (total < 0) {
        return out;
    }
    std::vector<int> current;
    std::function<void(int, int)> extend = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            extend(remaining - part, part);
            current.pop_back();
        }
    };
    extend(total, total);
    return out;
}

// ---------------------------------------------------------------------------
// Diagram

bool is_young_closed(std::size_t dim, const Diagram::container &boxes)
{
    for (const Box &b : boxes) {
        if (b.dim() != dim) {
            return false;
        }
        for (std::size_t t = 0; t < dim; ++t) {
            if (b.coords[t] < 0) {
                return false;
            }
            if (b.coords[t] > 0) {
                Box below = b;
                --below.coords[t];
                if (boxes.count(below) == 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

Diagram::Diagram(std::size_t dim) : m_dim(dim)
{
    if (dim == 0) {
        throw DimensionError("diagram dimension must be at least 1");
    }
}

Diagram::Diagram(std::size_t dim, container boxes) : m_dim(dim), m_boxes(std::move(boxes))
{
    if (dim == 0) {
        throw DimensionError("diagram dimension must be at least 1");
    }
    if (!is_young_closed(dim, m_boxes)) {
        throw InvalidDiagram("box set is not a " + std::to_string(dim) + "-dimensional Young diagram");
    }
}

int Diagram::max_weight() const noexcept
{
    int w = -1;
    for (const Box &b : m_boxes) {
        w = std::max(w, box_weight(b));
    }
    return w;
}

bool Diagram::is_subset_of(const Diagram &other) const
{
    return m_dim == other.m_dim
           && std::includes(other.m_boxes.begin(), other.m_boxes.end(), m_boxes.begin(), m_boxes.end());
}

namespace
{

void require_dim(const Diagram &d, std::size_t dim, const char *op)
{
    if (d.dim() != dim) {
        throw DimensionError(std::string(op) + " requires a " + std::to_string(dim) + "-dimensional diagram, got "
                             + std::to_string(d.dim()));
    }
}

void require_same_dim(const Diagram &a, const Diagram &b, const char *op)
{
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimensions differ (" + std::to_string(a.dim()) + " vs "
                             + std::to_string(b.dim()) + ")");
    }
}

} // namespace

Diagram partition_to_diagram(const Partition &p)
{
    Diagram::container boxes;
    for (std::size_t j = 0; j < p.length(); ++j) {
        for (int i = 0; i < p.parts()[j]; ++i) {
            boxes.insert(Box{i, static_cast<int>(j)});
        }
    }
    return Diagram(2, std::move(boxes));
}

Partition diagram_to_partition(const Diagram &d)
{
    require_dim(d, 2, "diagram_to_partition");
    std::vector<int> rows;
    for (const Box &b : d) {
        auto j = static_cast<std::size_t>(b[1]);
        if (rows.size() <= j) {
            rows.resize(j + 1, 0);
        }
        ++rows[j];
    }
    return Partition(std::move(rows));
}

Diagram diagram_union(const Diagram &a, const Diagram &b)
{
    require_same_dim(a, b, "diagram_union");
    Diagram::container boxes = a.boxes();
    boxes.insert(b.begin(), b.end());
    return Diagram(a.dim(), std::move(boxes));
}

Diagram diagram_intersection(const Diagram &a, const Diagram &b)
{
    require_same_dim(a, b, "diagram_intersection");
    Diagram::container boxes;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(boxes, boxes.end()));
    return Diagram(a.dim(), std::move(boxes));
}

DiagonalProfile diagonal_profile(const Diagram &d)
{
    DiagonalProfile counts(static_cast<std::size_t>(d.max_weight() + 1), 0);
    for (const Box &b : d) {
        ++counts[static_cast<std::size_t>(box_weight(b))];
    }
    return counts;
}

Diagram truncate_at_diagonal(const Diagram &d, int k)
{
    if (k < 0) {
        throw InvalidRange("diagonal index must be non-negative, got " + std::to_string(k));
    }
    Diagram::container boxes;
    for (const Box &b : d) {
        if (box_weight(b) <= k) {
            boxes.insert(b);
        }
    }
    return Diagram(d.dim(), std::move(boxes));
}

std::set<Box> inner_corners(const Diagram &d)
{
    const std::size_t m = d.dim();
    std::set<Box> candidates;
    if (d.empty()) {
        candidates.insert(Box(std::vector<int>(m, 0)));
    }
    for (const Box &b : d) {
        for (std::size_t t = 0; t < m; ++t) {
            Box up = b;
            ++up.coords[t];
            candidates.insert(std::move(up));
        }
    }
    std::set<Box> corners;
    for (const Box &c : candidates) {
        if (d.contains(c)) {
            continue;
        }
        bool corner = true;
        for (std::size_t t = 0; t < m && corner; ++t) {
            if (c.coords[t] > 0) {
                Box below = c;
                --below.coords[t];
                corner = d.contains(below);
            }
        }
        if (corner) {
            corners.insert(c);
        }
    }
    return corners;
}

std::set<Box> outer_corners(const Diagram &d)
{
    require_dim(d, 2, "outer_corners");
    std::set<Box> corners;
    for (const Box &b : d) {
        const Box c{b[0] + 1, b[1] + 1};
        if (!d.contains(c) && !d.contains(Box{b[0], b[1] + 1}) && !d.contains(Box{b[0] + 1, b[1]})) {
            corners.insert(c);
        }
    }
    return corners;
}

Diagram thicken(const Diagram &d, const std::set<Box> &chosen)
{
    const std::set<Box> corners = inner_corners(d);
    Diagram::container boxes = d.boxes();
    for (const Box &c : chosen) {
        if (corners.count(c) == 0) {
            throw NotAnInnerCorner("box " + to_string(c) + " is not an inner corner of the diagram");
        }
        boxes.insert(c);
    }
    return Diagram(d.dim(), std::move(boxes));
}

Partition partition_sum(const Partition &a, const Partition &b)
{
    std::vector<int> parts(std::max(a.length(), b.length()));
    for (std::size_t j = 0; j < parts.size(); ++j) {
        parts[j] = a[j] + b[j];
    }
    return Partition(std::move(parts));
}

Diagram three_dim_diagram(const Partition &lam, const Partition &mu)
{
    Diagram::container boxes;
    for (std::size_t j = 0; j < mu.length(); ++j) {
        for (int i = 0; i < mu[j]; ++i) {
            for (int k = 0; k < lam[j]; ++k) {
                boxes.insert(Box{i, static_cast<int>(j), k});
            }
        }
    }
    return Diagram(3, std::move(boxes));
}

Diagram permute_axes(const Diagram &d, const std::vector<std::size_t> &perm)
{
    if (perm.size() != d.dim()) {
        throw DimensionError("axis permutation has length " + std::to_string(perm.size()) + ", diagram has dimension "
                             + std::to_string(d.dim()));
    }
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t t = 0; t < sorted.size(); ++t) {
        if (sorted[t] != t) {
            throw InvalidRange("not a permutation of the axes");
        }
    }
    Diagram::container boxes;
    for (const Box &b : d) {
        std::vector<int> c(d.dim());
        for (std::size_t t = 0; t < d.dim(); ++t) {
            c[t] = b.coords[perm[t]];
        }
        boxes.insert(Box(std::move(c)));
    }
    return Diagram(d.dim(), std::move(boxes));
}

std::vector<Partition> layers(const Diagram &d3)
{
    require_dim(d3, 3, "layers");
    std::vector<std::vector<int>> rows;
    for (const Box &b : d3) {
        auto k = static_cast<std::size_t>(b[2]);
        auto j = static_cast<std::size_t>(b[1]);
        if (rows.size() <= k) {
            rows.resize(k + 1);
        }
        if (rows[k].size() <= j) {
            rows[k].resize(j + 1, 0);
        }
        ++rows[k][j];
    }
    std::vector<Partition> out;
    out.reserve(rows.size());
    for (auto &r : rows) {
        out.emplace_back(std::move(r));
    }
    return out;
}

} // namespace mms
