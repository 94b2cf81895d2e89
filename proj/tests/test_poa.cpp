#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "advncg/cost.hpp"
#include "advncg/families.hpp"
#include "advncg/moves.hpp"
#include "advncg/poa.hpp"

using namespace advncg;

namespace {

GameConfig cfg_adv(const Rational& alpha, int cap = 2) {
    GameConfig c;
    c.alpha = alpha;
    c.cap = cap;
    return c;
}

} // namespace

TEST_CASE("state enumeration covers all ownership splits") {
    long long states = 0;
    for_each_state(3, 2, 1'000'000, [&](const OwnedMultiGraph&) { ++states; });
    CHECK(states == 216);  // 6 splits per pair, 3 pairs

    long long states2 = 0;
    for_each_state(2, 1, 1'000'000, [&](const OwnedMultiGraph&) { ++states2; });
    CHECK(states2 == 3);

    CHECK_THROWS_AS(for_each_state(5, 2, 1000, [](const OwnedMultiGraph&) {}), advncg::Error);
}

TEST_CASE("every enumerated equilibrium verifies") {
    GameConfig cfg = cfg_adv(Rational(201, 1000));
    NeSearchOptions opts;
    long long count = 0;
    bool complete = for_each_ne(3, cfg, opts, [&](const OwnedMultiGraph& g) {
        ++count;
        CHECK(is_nash_equilibrium(g, cfg).is_ne);
    });
    CHECK(complete);
    CHECK(count == 54);  // all single-pair doubled cliques, every ownership split
}

TEST_CASE("stability is exact at the doubled-clique threshold") {
    NeSearchOptions opts;
    PoaCell cell = poa_cell(3, Rational(1, 6), cfg_adv(Rational(1, 6)), opts);
    CHECK(cell.search_complete);
    CHECK(cell.opt_cost == ExtCost(7));
    CHECK(cell.ne_count == 27);
    CHECK(cell.has_ratios());
    CHECK(cell.pos() == Rational(1));
    CHECK(cell.poa() == Rational(1));
}

TEST_CASE("stability leaves 1 just above the threshold") {
    NeSearchOptions opts;
    Rational alpha = Rational(1, 5) + Rational(1, 1000);
    PoaCell cell = poa_cell(3, alpha, cfg_adv(alpha), opts);
    CHECK(cell.search_complete);
    CHECK(cell.has_ratios());
    CHECK(cell.pos() > Rational(1));
    CHECK(cell.pos() == Rational(7405, 7206));
    CHECK(cell.best_ne_cost == ExtCost::ratio(1481, 200));
}

TEST_CASE("degenerate cap-1 two-agent game has only infinite equilibria") {
    NeSearchOptions opts;
    PoaCell cell = poa_cell(2, Rational(1), cfg_adv(Rational(1), 1), opts);
    CHECK(cell.search_complete);
    CHECK(cell.ne_count == 3);  // every state; nobody can reach a finite cost
    CHECK(cell.opt_cost.is_infinite());
    CHECK_FALSE(cell.has_ratios());
}

TEST_CASE("sampled mode finds the doubled star witness at huge alpha") {
    GameConfig cfg = cfg_adv(Rational(1000000000));
    NeSearchOptions opts;
    opts.sampled = true;
    opts.samples = 200;
    opts.seed = 5;
    PoaCell cell = poa_cell(4, Rational(1000000000), cfg, opts);
    CHECK_FALSE(cell.search_complete);
    CHECK(cell.ne_count >= 1);
    ExtCost ds_cost = social_cost(build_family({FamilyKind::DoubledStar, 4, 0}), cfg);
    CHECK(cell.worst_ne_cost >= ds_cost);
}

TEST_CASE("grid wraps cells in order") {
    NeSearchOptions opts;
    auto cells = poa_grid(3, {Rational(1, 6), Rational(1)}, cfg_adv(Rational(1)), opts);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].alpha == Rational(1, 6));
    CHECK(cells[1].alpha == Rational(1));
    CHECK(cells[0].n == 3);
}
