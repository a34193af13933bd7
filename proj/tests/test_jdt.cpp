#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tf/crystal.hpp"
#include "tf/jdt.hpp"

using namespace tf;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Composition C(std::vector<int> v) { return Composition(std::move(v)); }
SkewTableau T(const char* text) { return SkewTableau::parse(text); }

// Every tableau of shape kappa with entries bounded by s.
std::vector<SkewTableau> crystal_set(const Partition& kappa, int s)
{
    std::vector<SkewTableau> out;
    for (const auto& cont : compositions_of(static_cast<int>(kappa.weight()), s))
        for (auto& t : enumerate_ssyt(kappa, Partition(), cont))
            out.push_back(std::move(t));
    return out;
}

}  // namespace

TEST_CASE("slide examples")
{
    auto [result, trace] = slide(T(".,1/1,2"), Cell{1, 1});
    CHECK(result == T("1,1/2"));
    CHECK(trace.start == Cell{1, 1});
    CHECK(trace.vacated == Cell{2, 2});

    CHECK_THROWS_AS(slide(T("1/2"), Cell{1, 1}), std::invalid_argument);

    auto [single, trace2] = slide(T(".,1"), Cell{1, 1});
    CHECK(single == T("1"));
    CHECK(trace2.vacated == Cell{1, 2});
}

TEST_CASE("slide trace path is edge-connected")
{
    auto [result, trace] = slide(T(".,.,1/.,1,2/1,2,3"), Cell{1, 2});
    (void)result;
    for (size_t i = 1; i < trace.path.size(); ++i) {
        int dr = trace.path[i].row - trace.path[i - 1].row;
        int dc = trace.path[i].col - trace.path[i - 1].col;
        CHECK(dr + dc == 1);
        CHECK(dr * dc == 0);
    }
}

TEST_CASE("reverse_slide examples")
{
    // Inverse of the first slide example.
    SkewTableau skew = T(".,1/1,2");
    auto [rectified, trace] = slide(skew, Cell{1, 1});
    CHECK(reverse_slide(rectified, trace.vacated) == skew);

    CHECK(reverse_slide(T("1"), Cell{1, 2}) == T(".,1"));
    CHECK_THROWS_AS(reverse_slide(T("1"), Cell{3, 1}), std::invalid_argument);
}

TEST_CASE("reverse_slide then slide is the identity on random skew tableaux")
{
    std::mt19937 rng(20240613);
    int done = 0;
    while (done < 200) {
        int n = 1 + static_cast<int>(rng() % 8);
        auto outers = partitions_of(n);
        Partition outer = outers[rng() % outers.size()];
        auto inners = subpartitions_of(outer);
        Partition inner = inners[rng() % inners.size()];
        if (outer.weight() == inner.weight())
            continue;
        SkewTableau t = oracle::random_ssyt(outer, inner, outer.rows() + 2, rng);
        auto spots = addable_cells(outer);
        Cell cell = spots[rng() % spots.size()];
        SkewTableau grown = reverse_slide(t, cell);
        // The reverse slide vacated exactly one new inner cell; find it.
        Cell vacated{0, 0};
        for (int r = 1; r <= grown.inner().rows(); ++r)
            if (grown.inner().part(r) != t.inner().part(r))
                vacated = Cell{r, grown.inner().part(r)};
        REQUIRE(vacated.row != 0);
        auto [back, trace] = slide(grown, vacated);
        CHECK(back == t);
        CHECK(trace.vacated == cell);
        ++done;
    }
}

TEST_CASE("rectify examples")
{
    CHECK(rectify(T(".,1/1,2")) == T("1,1/2"));
    CHECK(rectify(T("1,2/3")) == T("1,2/3"));
    CHECK(rectify(T(".,1/1")) == T("1,1"));
    CHECK(rectify(SkewTableau()) == SkewTableau());
}

TEST_CASE("rectification is confluent for |outer| <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& outer : partitions_of(n)) {
            for (const auto& inner : subpartitions_of(outer)) {
                int cells = static_cast<int>(outer.weight() - inner.weight());
                for (const auto& cont : compositions_of(cells, 3)) {
                    for (const auto& t : enumerate_ssyt(outer, inner, cont)) {
                        std::set<SkewTableau> results;
                        oracle::rectify_all_orders(t, results);
                        REQUIRE(results.size() == 1);
                        CHECK(*results.begin() == rectify(t));
                    }
                }
            }
        }
    }
}

TEST_CASE("demote examples")
{
    CHECK(demote(T("1,2/3,4"), 4) == T("1,3/2,4"));
    CHECK(demote(T("1,1"), 2) == T("2,2"));
    CHECK(demote(T("1,2"), 2) == T("1,2"));
    CHECK_THROWS_AS(demote(T("1,3"), 2), std::invalid_argument);
    CHECK_THROWS_AS(demote(T(".,1/1"), 2), std::invalid_argument);
}

TEST_CASE("promote examples")
{
    CHECK(promote(T("1,3/2,4"), 4) == T("1,2/3,4"));
    CHECK(promote(T("1,1/2,2"), 2) == T("1,1/2,2"));

    // The two standard tableaux of shape (2,2) swap under promotion.
    CHECK(promote(T("1,2/3,4"), 4) == T("1,3/2,4"));
    CHECK_THROWS_AS(promote(T("1,3"), 2), std::invalid_argument);
}

TEST_CASE("promote and demote invert each other, |kappa| <= 8, s <= 5")
{
    for (int s = 1; s <= 5; ++s) {
        for (int n = 1; n <= 8; ++n) {
            for (const auto& kappa : partitions_of(n, s)) {
                for (const auto& t : crystal_set(kappa, s)) {
                    SkewTableau down = demote(t, s);
                    CHECK(promote(down, s) == t);
                    SkewTableau up = promote(t, s);
                    CHECK(demote(up, s) == t);
                    CHECK(content(down, s).parts() == [&] {
                        auto parts = content(t, s).parts();
                        std::vector<int> cycled(parts.begin() + 1, parts.end());
                        cycled.push_back(parts[0]);
                        return cycled;
                    }());
                }
            }
        }
    }
}

TEST_CASE("promotion strips the vacated cells as a horizontal strip")
{
    // demote's refill region must be a horizontal strip; exercised via its
    // internal check over a sweep of shapes.
    for (const auto& kappa : partitions_of(6, 3))
        for (const auto& t : crystal_set(kappa, 3))
            CHECK_NOTHROW(demote(t, 3));
}

TEST_CASE("promotion order: pr^s = id exactly on rectangles")
{
    // Positive: rectangles c^r with c*r <= 9, s = r.
    for (int r = 1; r <= 4; ++r) {
        for (int c = 1; c * r <= 9; ++c) {
            Partition kappa(std::vector<int>(r, c));
            for (const auto& t : crystal_set(kappa, r)) {
                SkewTableau cur = t;
                for (int i = 0; i < r; ++i)
                    cur = promote(cur, r);
                CHECK(cur == t);
            }
        }
    }
    // Negative witness: kappa = (2,1), s = 3 has pr^2 = id, so pr^3 = pr != id.
    bool all_fixed = true;
    for (const auto& t : crystal_set(P({2, 1}), 3)) {
        SkewTableau cur = t;
        for (int i = 0; i < 3; ++i)
            cur = promote(cur, 3);
        if (cur != t)
            all_fixed = false;
        SkewTableau twice = promote(promote(t, 3), 3);
        CHECK(twice == t);
    }
    CHECK(!all_fixed);
}

TEST_CASE("evacuate examples")
{
    CHECK(evacuate(T("1,2/3"), 3) == T("1,3/2"));
    CHECK(evacuate(T("1,1"), 2) == T("2,2"));
    for (const auto& t : crystal_set(P({3, 2}), 3))
        CHECK(evacuate(evacuate(t, 3), 3) == t);
}

TEST_CASE("evacuation reverses the content")
{
    for (int s = 1; s <= 4; ++s) {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& kappa : partitions_of(n, s)) {
                for (const auto& t : crystal_set(kappa, s)) {
                    auto c = content(t, s).parts();
                    std::vector<int> rev(c.rbegin(), c.rend());
                    CHECK(content(evacuate(t, s), s).parts() == rev);
                }
            }
        }
    }
}

TEST_CASE("slides commute with the crystal operators on random skew tableaux")
{
    std::mt19937 rng(987654);
    int done = 0;
    while (done < 200) {
        int n = 2 + static_cast<int>(rng() % 7);
        auto outers = partitions_of(n);
        Partition outer = outers[rng() % outers.size()];
        auto inners = subpartitions_of(outer);
        Partition inner = inners[rng() % inners.size()];
        auto corners = inside_corners(outer, inner);
        if (corners.empty())
            continue;
        int s = outer.rows() + 2;
        SkewTableau t = oracle::random_ssyt(outer, inner, s, rng);
        Cell corner = corners[rng() % corners.size()];
        for (int i = 1; i < s; ++i) {
            auto jdt_then_e = apply_e(slide(t, corner).first, i);
            auto e_then_jdt = apply_e(t, i);
            if (e_then_jdt)
                CHECK(jdt_then_e == slide(*e_then_jdt, corner).first);
            else
                CHECK(!jdt_then_e);
            auto jdt_then_f = apply_f(slide(t, corner).first, i);
            auto f_then_jdt = apply_f(t, i);
            if (f_then_jdt)
                CHECK(jdt_then_f == slide(*f_then_jdt, corner).first);
            else
                CHECK(!jdt_then_f);
        }
        ++done;
    }
}

TEST_CASE("string lengths are invariant under rectification")
{
    for (const auto& outer : partitions_of(6)) {
        for (const auto& inner : subpartitions_of(outer)) {
            int cells = static_cast<int>(outer.weight() - inner.weight());
            if (cells == 0)
                continue;
            for (const auto& cont : compositions_of(cells, 3)) {
                for (const auto& t : enumerate_ssyt(outer, inner, cont)) {
                    SkewTableau r = rectify(t);
                    for (int i = 1; i < 3; ++i)
                        CHECK(string_lengths(t, i) == string_lengths(r, i));
                }
            }
        }
    }
}

TEST_CASE("promotion intertwines the crystal operators: pr(e_i T) = e_{i+1} pr(T)")
{
    for (int s = 2; s <= 4; ++s) {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& kappa : partitions_of(n, s)) {
                for (const auto& t : crystal_set(kappa, s)) {
                    SkewTableau pr_t = promote(t, s);
                    for (int i = 1; i + 1 <= s - 1; ++i) {
                        auto e_t = apply_e(t, i);
                        auto rhs = apply_e(pr_t, i + 1);
                        if (e_t)
                            CHECK(rhs == promote(*e_t, s));
                        else
                            CHECK(!rhs);
                        auto f_t = apply_f(t, i);
                        auto rhs_f = apply_f(pr_t, i + 1);
                        if (f_t)
                            CHECK(rhs_f == promote(*f_t, s));
                        else
                            CHECK(!rhs_f);
                    }
                }
            }
        }
    }
}

TEST_CASE("evacuation intertwines the crystal operators: xi(e_i T) = f_{s-i} xi(T)")
{
    for (int s = 2; s <= 4; ++s) {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& kappa : partitions_of(n, s)) {
                for (const auto& t : crystal_set(kappa, s)) {
                    SkewTableau xi_t = evacuate(t, s);
                    for (int i = 1; i <= s - 1; ++i) {
                        auto e_t = apply_e(t, i);
                        auto rhs = apply_f(xi_t, s - i);
                        if (e_t)
                            CHECK(rhs == evacuate(*e_t, s));
                        else
                            CHECK(!rhs);
                        auto f_t = apply_f(t, i);
                        auto rhs_e = apply_e(xi_t, s - i);
                        if (f_t)
                            CHECK(rhs_e == evacuate(*f_t, s));
                        else
                            CHECK(!rhs_e);
                    }
                }
            }
        }
    }
}

TEST_CASE("promotion shifts the weight by the long cycle")
{
    for (int s = 2; s <= 4; ++s) {
        for (const auto& kappa : partitions_of(5, s)) {
            for (const auto& t : crystal_set(kappa, s)) {
                auto c = content(t, s).parts();
                std::vector<int> cycled(s);
                for (int i = 0; i < s; ++i)
                    cycled[(i + 1) % s] = c[i];
                CHECK(content(promote(t, s), s).parts() == cycled);
            }
        }
    }
}
