#include "persw/z2/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "persw/error.hpp"

namespace persw::z2 {

std::vector<Interval> Barcode::in_dimension(int dim) const {
    std::vector<Interval> out;
    for (const auto& i : intervals)
        if (i.dim == dim) out.push_back(i);
    return out;
}

std::size_t Barcode::count(int dim) const {
    return static_cast<std::size_t>(
        std::ranges::count_if(intervals, [dim](const Interval& i) { return i.dim == dim; }));
}

std::size_t Barcode::infinite_count(int dim) const {
    return static_cast<std::size_t>(std::ranges::count_if(
        intervals, [dim](const Interval& i) { return i.dim == dim && i.is_infinite(); }));
}

Interval Barcode::longest(int dim) const {
    Interval best{dim, 0.0, 0.0};
    for (const auto& i : intervals)
        if (i.dim == dim && i.length() > best.length()) best = i;
    return best;
}

namespace {

using Column = std::vector<std::uint32_t>;

// this ^= other, both sorted ascending
void add_column(Column& target, const Column& other, Column& scratch) {
    scratch.clear();
    std::ranges::set_symmetric_difference(target, other, std::back_inserter(scratch));
    target.swap(scratch);
}

}  // namespace

Barcode barcode(const FilteredComplex& filtration, int max_dim) {
    if (max_dim < 0) throw InvalidArgument("max_dim must be nonnegative");
    const auto& k = filtration.complex();
    const int top = std::min(k.dimension(), max_dim + 1);
    Barcode out;
    if (top < 0) return out;

    // global filtration order
    struct Entry {
        double value;
        int dim;
        std::uint32_t index;
    };
    std::vector<Entry> order;
    for (int d = 0; d <= top; ++d)
        for (std::size_t i = 0; i < k.size(d); ++i)
            order.push_back({filtration.value(d, i), d, static_cast<std::uint32_t>(i)});
    std::ranges::sort(order, [](const Entry& a, const Entry& b) {
        return std::tie(a.value, a.dim, a.index) < std::tie(b.value, b.dim, b.index);
    });
    std::vector<std::vector<std::uint32_t>> position(top + 1);
    for (int d = 0; d <= top; ++d) position[d].resize(k.size(d));
    for (std::uint32_t p = 0; p < order.size(); ++p) position[order[p].dim][order[p].index] = p;

    constexpr std::uint32_t unpaired = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> partner(order.size(), unpaired);
    std::vector<bool> cleared(order.size(), false);
    std::vector<bool> zero_column(order.size(), false);
    for (std::size_t i = 0; i < k.size(0); ++i) zero_column[position[0][i]] = true;

    Column scratch;
    VertexId buf[16];
    for (int d = top; d >= 1; --d) {
        // columns of dimension d in filtration order
        std::vector<std::uint32_t> columns;
        for (std::uint32_t p = 0; p < order.size(); ++p)
            if (order[p].dim == d && !cleared[p]) columns.push_back(p);
        std::unordered_map<std::uint32_t, Column> reduced;  // pivot row -> reduced column
        for (auto p : columns) {
            Column col;
            auto s = k.simplex(d, order[p].index);
            for (int skip = 0; skip <= d; ++skip) {
                int n = 0;
                for (int j = 0; j <= d; ++j)
                    if (j != skip) buf[n++] = s[j];
                const auto f = k.find(std::span<const VertexId>(buf, static_cast<std::size_t>(d)));
                col.push_back(position[d - 1][*f]);
            }
            std::ranges::sort(col);
            while (!col.empty()) {
                auto it = reduced.find(col.back());
                if (it == reduced.end()) break;
                add_column(col, it->second, scratch);
            }
            if (col.empty()) {
                zero_column[p] = true;
                continue;
            }
            const auto pivot = col.back();
            partner[pivot] = p;
            partner[p] = pivot;
            cleared[pivot] = true;
            reduced.emplace(pivot, std::move(col));
        }
    }

    for (std::uint32_t p = 0; p < order.size(); ++p) {
        const int d = order[p].dim;
        if (d > max_dim) continue;
        if (partner[p] != unpaired) {
            if (partner[p] < p) continue;  // negative simplex
            const double birth = order[p].value;
            const double death = order[partner[p]].value;
            if (death > birth) out.intervals.push_back({d, birth, death});
        } else if (zero_column[p]) {
            out.intervals.push_back({d, order[p].value, infinity});
        }
    }
    std::ranges::sort(out.intervals, [](const Interval& a, const Interval& b) {
        return std::tie(a.dim, a.birth, a.death) < std::tie(b.dim, b.birth, b.death);
    });
    return out;
}

}  // namespace persw::z2
