#include "tf/crystal.hpp"

#include <deque>
#include <stdexcept>

#include "tf/jdt.hpp"

namespace tf {

CrystalIndexSet CrystalIndexSet::full(int s)
{
    CrystalIndexSet set{s, {}};
    for (int i = 1; i < s; ++i)
        set.indices.push_back(i);
    return set;
}

CrystalIndexSet CrystalIndexSet::blocks(int m, int n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("CrystalIndexSet::blocks: m, n must be positive");
    CrystalIndexSet set{m * n, {}};
    for (int k = 0; k < n; ++k)
        for (int i = k * m + 1; i < (k + 1) * m; ++i)
            set.indices.push_back(i);
    return set;
}

namespace {

// Per-column occurrence counts of i and i+1; column j of a skew tableau holds
// each value at most once.
std::pair<std::vector<int>, std::vector<int>> column_counts(const SkewTableau& t, int i)
{
    int cols = t.outer().part(1);
    std::vector<int> lo(cols + 1, 0), hi(cols + 1, 0);
    for (const Cell& c : t.cell_list()) {
        int v = t.entry(c.row, c.col);
        if (v == i)
            ++lo[c.col];
        else if (v == i + 1)
            ++hi[c.col];
    }
    return {lo, hi};
}

SkewTableau replace_in_column(const SkewTableau& t, int col, int from, int to)
{
    SkewTableau out = t;
    for (int r = 1; r <= t.outer().rows(); ++r) {
        if (out.has_cell(r, col) && out.entry(r, col) == from) {
            out.set_entry(r, col, to);
            if (!out.is_semistandard())
                throw std::logic_error("crystal operator produced a non-tableau");
            return out;
        }
    }
    throw std::logic_error("crystal operator: chosen column lost its entry");
}

}  // namespace

std::optional<SkewTableau> apply_e(const SkewTableau& t, int i)
{
    if (i < 1)
        throw std::invalid_argument("apply_e: index out of range");
    auto [lo, hi] = column_counts(t, i);
    int cols = t.outer().part(1);
    int best = 0, best_col = 0, suffix = 0;
    for (int j = cols; j >= 1; --j) {
        suffix += hi[j] - lo[j];
        if (suffix > best) {
            best = suffix;
            best_col = j;
        }
    }
    if (best <= 0)
        return std::nullopt;
    return replace_in_column(t, best_col, i + 1, i);
}

std::optional<SkewTableau> apply_f(const SkewTableau& t, int i)
{
    if (i < 1)
        throw std::invalid_argument("apply_f: index out of range");
    auto [lo, hi] = column_counts(t, i);
    int cols = t.outer().part(1);
    int best = 0, best_col = 0, prefix = 0;
    for (int j = 1; j <= cols; ++j) {
        prefix += lo[j] - hi[j];
        if (prefix > best) {
            best = prefix;
            best_col = j;
        }
    }
    if (best <= 0)
        return std::nullopt;
    return replace_in_column(t, best_col, i, i + 1);
}

std::pair<int, int> string_lengths(const SkewTableau& t, int i)
{
    if (i < 1)
        throw std::invalid_argument("string_lengths: index out of range");
    int eps = 0, phi = 0;
    SkewTableau cur = t;
    while (auto up = apply_e(cur, i)) {
        cur = std::move(*up);
        ++eps;
    }
    cur = t;
    while (auto down = apply_f(cur, i)) {
        cur = std::move(*down);
        ++phi;
    }
    return {eps, phi};
}

bool is_highest_weight(const SkewTableau& t, const CrystalIndexSet& s)
{
    for (int i : s.indices)
        if (apply_e(t, i))
            return false;
    return true;
}

SplitTuple split_blocks(const SkewTableau& t, int m, int n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("split_blocks: m, n must be positive");
    if (!t.straight())
        throw std::invalid_argument("split_blocks: straight shape required");
    if (t.max_entry() > m * n)
        throw std::invalid_argument("split_blocks: entry out of range 1..m*n");

    // Shape of the subdiagram of entries <= b, per b = 0, m, 2m, ..., nm.
    auto shape_below = [&](int bound) {
        std::vector<int> parts(t.outer().rows(), 0);
        for (int r = 1; r <= t.outer().rows(); ++r) {
            int c = 1;
            while (t.has_cell(r, c) && t.entry(r, c) <= bound)
                ++c;
            parts[r - 1] = c - 1;
        }
        return Partition(parts);
    };

    SplitTuple tuple;
    Partition below;
    for (int k = 0; k < n; ++k) {
        Partition above = shape_below((k + 1) * m);
        std::vector<std::vector<int>> rows(above.rows());
        for (int r = 1; r <= above.rows(); ++r)
            for (int c = below.part(r) + 1; c <= above.part(r); ++c)
                rows[r - 1].push_back(t.entry(r, c) - k * m);
        SkewTableau block(above, below, std::move(rows));
        tuple.blocks.push_back(k == 0 ? block : rectify(block));
        below = above;
    }
    return tuple;
}

std::set<SkewTableau> component_of(const SkewTableau& t, const CrystalIndexSet& s)
{
    std::set<SkewTableau> seen{t};
    std::deque<SkewTableau> queue{t};
    while (!queue.empty()) {
        SkewTableau cur = queue.front();
        queue.pop_front();
        for (int i : s.indices) {
            for (auto next : {apply_e(cur, i), apply_f(cur, i)}) {
                if (next && !seen.count(*next)) {
                    seen.insert(*next);
                    queue.push_back(*next);
                }
            }
        }
    }
    return seen;
}

}  // namespace tf
