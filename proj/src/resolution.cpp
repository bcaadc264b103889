#include "mms/resolution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "mms/errors.hpp"
#include "mms/hilbert.hpp"

namespace mms
{

namespace
{

void require_nonempty_2d(const Diagram &d, const char *op)
{
    if (d.dim() != 2) {
        throw DimensionError(std::string(op) + " requires a 2-dimensional diagram, got "
                             + std::to_string(d.dim()));
    }
    if (d.empty()) {
        throw EmptyDiagram(std::string(op) + " is undefined for the empty diagram (unit ideal)");
    }
}

std::vector<int> sorted_weights(const std::set<Box> &boxes)
{
    std::vector<int> w;
    w.reserve(boxes.size());
    for (const Box &b : boxes) {
        w.push_back(box_weight(b));
    }
    std::sort(w.begin(), w.end(), std::greater<>{});
    return w;
}

bool weakly_decreasing(const std::vector<int> &v)
{
    return std::is_sorted(v.begin(), v.end(), std::greater<>{});
}

} // namespace

DegreePair degree_pair(const Diagram &d)
{
    require_nonempty_2d(d, "degree_pair");
    return DegreePair{sorted_weights(inner_corners(d)), sorted_weights(outer_corners(d))};
}

bool validate_pair(const DegreePair &p)
{
    const auto &a = p.gen_degrees;
    const auto &b = p.syz_degrees;
    if (a.size() != b.size() + 1) {
        return false;
    }
    if (!weakly_decreasing(a) || !weakly_decreasing(b)) {
        return false;
    }
    if (a.back() < 1) {
        return false;
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] <= a[i]) {
            return false;
        }
    }
    return std::accumulate(a.begin(), a.end(), 0L) == std::accumulate(b.begin(), b.end(), 0L);
}

Diagram staircase_from_pair(const DegreePair &p)
{
    if (!validate_pair(p)) {
        throw InvalidPair("degree pair violates the staircase conditions");
    }
    const auto &a = p.gen_degrees;
    const auto &b = p.syz_degrees;
    // Inner corners (x_k, y_k) with x increasing from 0 and y decreasing to 0.
    std::vector<Box> corners;
    int x = 0;
    int y = a.front();
    corners.push_back(Box{x, y});
    for (std::size_t k = 0; k < b.size(); ++k) {
        x += b[k] - a[k];
        y -= b[k] - a[k + 1];
        corners.push_back(Box{x, y});
    }
    // Row j extends up to the x-coordinate of the first corner at height <= j.
    Diagram::container boxes;
    for (int row = 0; row < a.front(); ++row) {
        int width = 0;
        for (const Box &c : corners) {
            if (c[1] <= row) {
                width = c[0];
                break;
            }
        }
        for (int i = 0; i < width; ++i) {
            boxes.insert(Box{i, row});
        }
    }
    return Diagram(2, std::move(boxes));
}

DegreePair reduce_pair(const DegreePair &p)
{
    std::vector<int> a = p.gen_degrees;
    std::vector<int> b = p.syz_degrees;
    std::sort(a.begin(), a.end(), std::greater<>{});
    std::sort(b.begin(), b.end(), std::greater<>{});
    DegreePair out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.gen_degrees),
                        std::greater<>{});
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out.syz_degrees),
                        std::greater<>{});
    return out;
}

bool r_equivalent(const Diagram &a, const Diagram &b)
{
    return reduce_pair(degree_pair(a)) == reduce_pair(degree_pair(b));
}

Integer hilbert_scheme_dimension(const Diagram &d, int n)
{
    require_nonempty_2d(d, "hilbert_scheme_dimension");
    if (n < 0) {
        throw InvalidRange("support dimension must be non-negative, got " + std::to_string(n));
    }
    const DegreePair p = degree_pair(d);
    const long N = n + 2;
    // Sum of C(hi - lo + N, N) over ordered pairs (hi, lo) with hi >= lo.
    auto ordered_sum = [N](const std::vector<int> &his, const std::vector<int> &los) {
        Integer s = 0;
        for (int hi : his) {
            for (int lo : los) {
                if (hi >= lo) {
                    s += binomial(hi - lo + N, N);
                }
            }
        }
        return s;
    };
    const auto &gen = p.gen_degrees;
    const auto &syz = p.syz_degrees;
    return ordered_sum(syz, gen) + ordered_sum(gen, syz) - ordered_sum(syz, syz) - ordered_sum(gen, gen) + 1;
}

bool same_component(const Diagram &a, const Diagram &b)
{
    if (a.dim() != 2 || b.dim() != 2) {
        throw DimensionError("same_component requires 2-dimensional diagrams");
    }
    const bool by_hilbert_function = R_equivalent(a, b);
    if (a.empty() || b.empty()) {
        return by_hilbert_function;
    }
    const bool by_resolution = r_equivalent(a, b);
    if (by_hilbert_function != by_resolution) {
        throw std::logic_error("R and r equivalence disagree on " + to_string(diagram_to_partition(a)) + " vs "
                               + to_string(diagram_to_partition(b)));
    }
    return by_hilbert_function;
}

std::string format_resolution(const DegreePair &p)
{
    auto module = [](const std::vector<int> &degrees) {
        std::string out;
        std::size_t k = 0;
        while (k < degrees.size()) {
            std::size_t run = k;
            while (run < degrees.size() && degrees[run] == degrees[k]) {
                ++run;
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += "S(-" + std::to_string(degrees[k]) + ")";
            if (run - k > 1) {
                out += "^" + std::to_string(run - k);
            }
            k = run;
        }
        return out.empty() ? std::string("0") : out;
    };
    return "0 -> " + module(p.syz_degrees) + " -> " + module(p.gen_degrees) + " -> I -> 0";
}

} // namespace mms
