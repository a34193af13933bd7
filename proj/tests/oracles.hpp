#pragma once

// Independent reference implementations used only by the test suites.  Each
// oracle deliberately recomputes its answer along a different route than the
// library code it checks.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "tf/jdt.hpp"
#include "tf/partition.hpp"
#include "tf/tableau.hpp"

namespace oracle {

// Conjugate by literally transposing the cell grid.
inline tf::Partition transpose_grid(const tf::Partition& p)
{
    std::set<std::pair<int, int>> cells;
    for (int r = 1; r <= p.rows(); ++r)
        for (int c = 1; c <= p.part(r); ++c)
            cells.insert({c, r});
    std::vector<int> parts;
    for (int r = 1;; ++r) {
        int len = 0;
        while (cells.count({r, len + 1}))
            ++len;
        if (len == 0)
            break;
        parts.push_back(len);
    }
    return tf::Partition(parts);
}

// Signature rule on the reading word: i+1 opens a bracket, i closes one;
// matched pairs cancel.  e_i rewrites the leftmost unmatched i+1, f_i the
// rightmost unmatched i.
struct BracketResult {
    int eps = 0, phi = 0;
    int e_word_pos = -1;  // index into the reading word, -1 if vanishing
    int f_word_pos = -1;
};

inline BracketResult bracket_scan(const tf::Word& w, int i)
{
    BracketResult res;
    std::vector<int> open;     // positions of unmatched i+1
    std::vector<int> closed;   // positions of unmatched i
    for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
        if (w[pos] == i + 1)
            open.push_back(pos);
        else if (w[pos] == i) {
            if (!open.empty())
                open.pop_back();
            else
                closed.push_back(pos);
        }
    }
    res.eps = static_cast<int>(open.size());
    res.phi = static_cast<int>(closed.size());
    if (!open.empty())
        res.e_word_pos = open.front();
    if (!closed.empty())
        res.f_word_pos = closed.back();
    return res;
}

// Cells in reading-word order (columns left to right, bottom to top).
inline std::vector<tf::Cell> reading_cells(const tf::SkewTableau& t)
{
    std::vector<tf::Cell> cells;
    for (int c = 1; c <= t.outer().part(1); ++c)
        for (int r = t.outer().rows(); r >= 1; --r)
            if (t.has_cell(r, c))
                cells.push_back({r, c});
    return cells;
}

inline std::optional<tf::SkewTableau> bracket_apply_e(const tf::SkewTableau& t, int i)
{
    auto res = bracket_scan(tf::reading_word(t), i);
    if (res.e_word_pos < 0)
        return std::nullopt;
    tf::SkewTableau out = t;
    tf::Cell cell = reading_cells(t)[res.e_word_pos];
    out.set_entry(cell.row, cell.col, i);
    return out;
}

inline std::optional<tf::SkewTableau> bracket_apply_f(const tf::SkewTableau& t, int i)
{
    auto res = bracket_scan(tf::reading_word(t), i);
    if (res.f_word_pos < 0)
        return std::nullopt;
    tf::SkewTableau out = t;
    tf::Cell cell = reading_cells(t)[res.f_word_pos];
    out.set_entry(cell.row, cell.col, i + 1);
    return out;
}

// Every rectification reachable by some order of inside-corner choices.
inline void rectify_all_orders(const tf::SkewTableau& t, std::set<tf::SkewTableau>& out)
{
    auto corners = tf::inside_corners(t.outer(), t.inner());
    if (corners.empty()) {
        out.insert(t);
        return;
    }
    for (const tf::Cell& corner : corners)
        rectify_all_orders(tf::slide(t, corner).first, out);
}

// Monomial-level symmetric polynomials on a fixed variable count, as maps
// from exponent vectors to coefficients.  Used to cross-check Schur products
// and power plethysms without going through the library's expansion code.
using Monomials = std::map<std::vector<int>, long long>;

// Schur realization via chains of horizontal strips (one strip per letter),
// a different algorithm from the cell-by-cell tableau enumeration.
inline void schur_monomials_rec(const tf::Partition& shape, int var, int nvars,
                                std::vector<int>& exps, Monomials& out)
{
    if (var > nvars) {
        if (shape.empty())
            ++out[exps];
        return;
    }
    for (const auto& smaller : tf::subpartitions_of(shape)) {
        if (!tf::is_horizontal_strip(shape, smaller))
            continue;
        exps[nvars - var] = static_cast<int>(shape.weight() - smaller.weight());
        schur_monomials_rec(smaller, var + 1, nvars, exps, out);
        exps[nvars - var] = 0;
    }
}

inline Monomials schur_monomials(const tf::Partition& shape, int nvars)
{
    Monomials out;
    std::vector<int> exps(nvars, 0);
    // Strips are peeled for the largest letter first.
    schur_monomials_rec(shape, 1, nvars, exps, out);
    return out;
}

inline Monomials poly_mul(const Monomials& a, const Monomials& b)
{
    Monomials out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline Monomials poly_power_substitute(const Monomials& a, int k)
{
    Monomials out;
    for (const auto& [e, c] : a) {
        std::vector<int> scaled(e.size());
        for (size_t i = 0; i < e.size(); ++i)
            scaled[i] = e[i] * k;
        out[scaled] += c;
    }
    return out;
}

// Deterministic random semistandard fillings: row-major, uniform choice among
// the entries that leave room for the column below.  Needs alphabet at least
// the tallest column.
inline tf::SkewTableau random_ssyt(const tf::Partition& outer, const tf::Partition& inner,
                                   int alphabet, std::mt19937& rng)
{
    std::vector<std::vector<int>> rows(outer.rows());
    std::vector<std::vector<int>> grid(outer.rows() + 1,
                                       std::vector<int>(outer.part(1) + 1, 0));
    auto has_cell = [&](int r, int c) {
        return r >= 1 && r <= outer.rows() && c > inner.part(r) && c <= outer.part(r);
    };
    for (int r = 1; r <= outer.rows(); ++r) {
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) {
            int lo = 1;
            if (has_cell(r, c - 1))
                lo = std::max(lo, grid[r - 1][c - 2]);
            if (has_cell(r - 1, c))
                lo = std::max(lo, grid[r - 2][c - 1] + 1);
            int below = 0;
            while (has_cell(r + 1 + below, c))
                ++below;
            int hi = alphabet - below;
            if (hi < lo)
                throw std::invalid_argument("random_ssyt: alphabet too small for shape");
            std::uniform_int_distribution<int> pick(lo, hi);
            int v = pick(rng);
            grid[r - 1][c - 1] = v;
            rows[r - 1].push_back(v);
        }
    }
    return tf::SkewTableau(outer, inner, std::move(rows));
}

}  // namespace oracle
