#include "tf/jdt.hpp"

#include <algorithm>
#include <stdexcept>

namespace tf {

namespace {

// Dense working grid, 1-based; 0 marks an absent entry.
struct Grid {
    std::vector<int> outer;  // outer[r-1], may carry a trailing grown row
    std::vector<int> inner;
    std::vector<std::vector<int>> val;

    static Grid of(const SkewTableau& t, int extra_rows, int extra_cols)
    {
        Grid g;
        int rows = t.outer().rows() + extra_rows;
        int cols = t.outer().part(1) + extra_cols;
        g.outer.assign(rows, 0);
        g.inner.assign(rows, 0);
        g.val.assign(rows + 1, std::vector<int>(cols + 1, 0));
        for (int r = 1; r <= t.outer().rows(); ++r) {
            g.outer[r - 1] = t.outer().part(r);
            g.inner[r - 1] = t.inner().part(r);
            for (int c = t.inner().part(r) + 1; c <= t.outer().part(r); ++c)
                g.val[r][c] = t.entry(r, c);
        }
        return g;
    }

    int rows() const { return static_cast<int>(outer.size()); }
    int out(int r) const { return (r >= 1 && r <= rows()) ? outer[r - 1] : 0; }
    int in(int r) const { return (r >= 1 && r <= rows()) ? inner[r - 1] : 0; }
    bool in_diagram(int r, int c) const { return c > in(r) && c <= out(r); }

    SkewTableau to_tableau() const
    {
        std::vector<int> op(outer), ip(inner);
        std::vector<std::vector<int>> rows_out;
        while (!op.empty() && op.back() == 0) {
            op.pop_back();
            ip.pop_back();
        }
        for (size_t r = 1; r <= op.size(); ++r) {
            std::vector<int> row;
            for (int c = ip[r - 1] + 1; c <= op[r - 1]; ++c)
                row.push_back(val[r][c]);
            rows_out.push_back(std::move(row));
        }
        return SkewTableau(Partition(op), Partition(ip), std::move(rows_out));
    }
};

}  // namespace

std::vector<Cell> inside_corners(const Partition& outer, const Partition& inner)
{
    (void)outer;
    std::vector<Cell> out;
    for (int r = 1; r <= inner.rows(); ++r)
        if (inner.part(r) > 0 && inner.part(r + 1) < inner.part(r))
            out.push_back({r, inner.part(r)});
    return out;
}

std::vector<Cell> addable_cells(const Partition& p)
{
    std::vector<Cell> out;
    for (int r = 1; r <= p.rows() + 1; ++r)
        if (r == 1 || p.part(r - 1) > p.part(r))
            out.push_back({r, p.part(r) + 1});
    return out;
}

std::pair<SkewTableau, SlideTrace> slide(const SkewTableau& t, Cell corner)
{
    auto corners = inside_corners(t.outer(), t.inner());
    if (std::find(corners.begin(), corners.end(), corner) == corners.end())
        throw std::invalid_argument("slide: not an inside corner");

    Grid g = Grid::of(t, 0, 0);
    Cell hole = corner;
    SlideTrace trace{corner, {corner}, corner};
    for (;;) {
        bool below = g.in_diagram(hole.row + 1, hole.col);
        bool right = g.in_diagram(hole.row, hole.col + 1);
        if (!below && !right)
            break;
        Cell from;
        if (below && (!right || g.val[hole.row + 1][hole.col] <= g.val[hole.row][hole.col + 1]))
            from = {hole.row + 1, hole.col};
        else
            from = {hole.row, hole.col + 1};
        g.val[hole.row][hole.col] = g.val[from.row][from.col];
        g.val[from.row][from.col] = 0;
        hole = from;
        trace.path.push_back(hole);
    }
    trace.vacated = hole;
    g.outer[hole.row - 1] -= 1;
    g.inner[corner.row - 1] -= 1;
    return {g.to_tableau(), trace};
}

SkewTableau reverse_slide(const SkewTableau& t, Cell cell)
{
    auto spots = addable_cells(t.outer());
    if (std::find(spots.begin(), spots.end(), cell) == spots.end())
        throw std::invalid_argument("reverse_slide: cell not addable to outer shape");

    Grid g = Grid::of(t, cell.row > t.outer().rows() ? 1 : 0,
                      cell.col > t.outer().part(1) ? 1 : 0);
    g.outer[cell.row - 1] += 1;
    Cell hole = cell;
    for (;;) {
        bool above = g.in_diagram(hole.row - 1, hole.col);
        bool left = g.in_diagram(hole.row, hole.col - 1);
        if (!above && !left)
            break;
        Cell from;
        if (above && (!left || g.val[hole.row - 1][hole.col] >= g.val[hole.row][hole.col - 1]))
            from = {hole.row - 1, hole.col};
        else
            from = {hole.row, hole.col - 1};
        g.val[hole.row][hole.col] = g.val[from.row][from.col];
        g.val[from.row][from.col] = 0;
        hole = from;
    }
    g.inner[hole.row - 1] += 1;
    return g.to_tableau();
}

SkewTableau rectify(const SkewTableau& t)
{
    SkewTableau cur = t;
    for (;;) {
        auto corners = inside_corners(cur.outer(), cur.inner());
        if (corners.empty())
            return cur;
        cur = slide(cur, corners.back()).first;
    }
}

namespace {

void require_straight_in_range(const SkewTableau& t, int s, const char* who)
{
    if (!t.straight())
        throw std::invalid_argument(std::string(who) + ": straight shape required");
    if (s < 0 || t.max_entry() > s)
        throw std::invalid_argument(std::string(who) + ": entry out of range 1..s");
    if (!t.is_semistandard())
        throw std::invalid_argument(std::string(who) + ": tableau not semistandard");
}

}  // namespace

SkewTableau demote(const SkewTableau& t, int s)
{
    require_straight_in_range(t, s, "demote");
    const Partition& kappa = t.outer();

    // In a straight semistandard tableau the 1s form a prefix of row 1.
    int ones = 0;
    while (t.has_cell(1, ones + 1) && t.entry(1, ones + 1) == 1)
        ++ones;

    std::vector<std::vector<int>> rows(kappa.rows());
    for (int r = 1; r <= kappa.rows(); ++r)
        for (int c = (r == 1 ? ones : 0) + 1; c <= kappa.part(r); ++c)
            rows[r - 1].push_back(t.entry(r, c) - 1);
    Partition strip_inner(ones > 0 ? std::vector<int>{ones} : std::vector<int>{});
    SkewTableau rect = rectify(SkewTableau(kappa, strip_inner, std::move(rows)));

    const Partition& kappa1 = rect.outer();
    if (!is_horizontal_strip(kappa, kappa1))
        throw std::logic_error("demote: vacated cells are not a horizontal strip");
    std::vector<std::vector<int>> filled(kappa.rows());
    for (int r = 1; r <= kappa.rows(); ++r) {
        for (int c = 1; c <= kappa1.part(r); ++c)
            filled[r - 1].push_back(rect.entry(r, c));
        for (int c = kappa1.part(r) + 1; c <= kappa.part(r); ++c)
            filled[r - 1].push_back(s);
    }
    return SkewTableau(kappa, Partition(), std::move(filled));
}

namespace {

// Reverse-rectify `cur` into the remaining strip cells; every intermediate
// inner shape must stay inside row 1 or the branch is dead.
bool grow_into_strip(SkewTableau& cur, std::vector<Cell>& strip)
{
    if (strip.empty())
        return true;
    for (size_t i = 0; i < strip.size(); ++i) {
        Cell cell = strip[i];
        auto spots = addable_cells(cur.outer());
        if (std::find(spots.begin(), spots.end(), cell) == spots.end())
            continue;
        SkewTableau next = reverse_slide(cur, cell);
        if (next.inner().rows() > 1)
            continue;
        std::vector<Cell> rest = strip;
        rest.erase(rest.begin() + static_cast<long>(i));
        if (grow_into_strip(next, rest)) {
            cur = std::move(next);
            strip.clear();
            return true;
        }
    }
    return false;
}

}  // namespace

SkewTableau promote(const SkewTableau& t, int s)
{
    require_straight_in_range(t, s, "promote");
    const Partition& kappa = t.outer();

    // The s-boxes are a trailing segment of each row; drop them.
    std::vector<int> kept(kappa.rows());
    std::vector<std::vector<int>> rows(kappa.rows());
    for (int r = 1; r <= kappa.rows(); ++r) {
        int c = 1;
        while (c <= kappa.part(r) && t.entry(r, c) < s) {
            rows[r - 1].push_back(t.entry(r, c));
            ++c;
        }
        kept[r - 1] = c - 1;
    }
    Partition kappa1{std::vector<int>(kept)};
    SkewTableau cur(kappa1, Partition(), std::move(rows));

    std::vector<Cell> strip;
    for (int r = 1; r <= kappa.rows(); ++r)
        for (int c = kappa1.part(r) + 1; c <= kappa.part(r); ++c)
            strip.push_back({r, c});
    std::sort(strip.begin(), strip.end(),
              [](const Cell& a, const Cell& b) { return a.col < b.col; });
    if (!grow_into_strip(cur, strip))
        throw std::logic_error("promote: no reverse slide order reaches a row strip");

    long long freed = kappa.weight() - kappa1.weight();
    if (cur.inner().part(1) != freed)
        throw std::logic_error("promote: vacated prefix has the wrong length");
    std::vector<std::vector<int>> out(kappa.rows());
    for (int r = 1; r <= kappa.rows(); ++r) {
        if (r == 1)
            out[0].assign(static_cast<size_t>(freed), 1);
        for (int c = cur.inner().part(r) + 1; c <= kappa.part(r); ++c)
            out[r - 1].push_back(cur.entry(r, c) + 1);
    }
    SkewTableau result(kappa, Partition(), std::move(out));
    if (!result.is_semistandard())
        throw std::logic_error("promote: result not semistandard");
    return result;
}

SkewTableau evacuate(const SkewTableau& t, int s)
{
    require_straight_in_range(t, s, "evacuate");
    const Partition& kappa = t.outer();

    std::vector<Partition> chain(static_cast<size_t>(s) + 1);
    SkewTableau cur = t;
    for (int bound = s; bound >= 1; --bound) {
        // Keep only entries within the current upper bound, then demote.
        std::vector<int> kept(cur.outer().rows());
        std::vector<std::vector<int>> rows(cur.outer().rows());
        for (int r = 1; r <= cur.outer().rows(); ++r) {
            int c = 1;
            while (c <= cur.outer().part(r) && cur.entry(r, c) <= bound) {
                rows[r - 1].push_back(cur.entry(r, c));
                ++c;
            }
            kept[r - 1] = c - 1;
        }
        cur = demote(SkewTableau(Partition(kept), Partition(), std::move(rows)), bound);
        chain[bound] = cur.outer();
    }
    chain[0] = Partition();

    std::vector<std::vector<int>> out(kappa.rows());
    for (int b = 1; b <= s; ++b)
        for (int r = 1; r <= kappa.rows(); ++r)
            for (int c = chain[b - 1].part(r); c < chain[b].part(r); ++c)
                out[r - 1].push_back(b);
    SkewTableau result(kappa, Partition(), std::move(out));
    if (!result.is_semistandard())
        throw std::logic_error("evacuate: result not semistandard");
    return result;
}

}  // namespace tf
