#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "planwright/sampling.hpp"

using namespace planwright;

// Values computed by a separate script implementing the same counter scheme.
TEST(RandomStream, FrozenDraws) {
    RandomStream r(1);
    EXPECT_EQ(r.next_u64(), 0xc6d0f9b638f2ba38ULL);
    EXPECT_EQ(r.next_u64(), 0x152b06e7f93dfbfeULL);
    EXPECT_EQ(r.next_u64(), 0xea4c614ccbc92125ULL);
    RandomStream s = RandomStream(1).substream(3);
    EXPECT_EQ(s.next_u64(), 0x0c44555ee356947eULL);
    EXPECT_EQ(s.next_u64(), 0x223b566d15c9db56ULL);
}

TEST(RandomStream, SameSeedSameSequence) {
    RandomStream a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next_u64();
        EXPECT_EQ(x, b.next_u64());
        differs = differs || x != c.next_u64();
    }
    EXPECT_TRUE(differs);
}

TEST(RandomStream, UniformIntInclusiveBounds) {
    RandomStream r(9);
    std::array<int, 4> seen{};
    for (int i = 0; i < 4000; ++i) {
        const auto v = r.uniform_int(3);
        ASSERT_LE(v, 3u);
        ++seen[v];
    }
    for (int n : seen) EXPECT_GT(n, 800);
    EXPECT_EQ(r.uniform_int(0), 0u);
}

TEST(RandomStream, DoubleInUnitInterval) {
    RandomStream r(5);
    for (int i = 0; i < 10000; ++i) {
        const double d = r.next_double();
        ASSERT_GE(d, 0.0);
        ASSERT_LT(d, 1.0);
    }
}

// The census table, typed in independently of the library.
constexpr double kCensus[5][10] = {
    {8.0338e-3, 1.4385e-2, 6.3392e-4, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 8.0221e-2, 4.3408e-2, 1.1586e-2, 3.4386e-3, 1.1857e-3, 5.8376e-4, 2.1361e-4, 1.0810e-4},
    {0, 0, 0, 9.6780e-2, 9.0908e-2, 3.9446e-2, 1.6442e-2, 8.5631e-3, 2.9806e-3, 1.5026e-3},
    {0, 0, 0, 0, 7.6431e-2, 1.0599e-1, 8.0343e-2, 5.4633e-2, 2.5820e-2, 2.5868e-2},
    {0, 0, 0, 0, 0, 1.4412e-2, 3.4647e-2, 5.2167e-2, 3.9863e-2, 6.9406e-2},
};

TEST(JointTable, CensusMatchesTypedTable) {
    const auto t = JointCountTable::census_2001();
    double raw = 0.0, sum = 0.0;
    for (auto& row : kCensus)
        for (double v : row) raw += v;
    for (int b = 0; b < 5; ++b)
        for (int r = 1; r <= 10; ++r) {
            EXPECT_NEAR(t.probability(b, r), kCensus[b][r - 1] / raw, 1e-12);
            sum += t.probability(b, r);
        }
    EXPECT_NEAR(sum, 1.0, 1e-6);
    EXPECT_NEAR(t.probability(3, 6), 0.10599, 1e-6);
    EXPECT_EQ(t.probability(0, 5), 0.0);
}

TEST(JointTable, RejectsImpossibleCellsAndZeroTables) {
    JointCountTable::Grid g{};
    g[2][1] = 0.5;  // 2 bedrooms in 2 rooms
    EXPECT_THROW(JointCountTable{g}, ConfigError);
    EXPECT_THROW(JointCountTable{JointCountTable::Grid{}}, ConfigError);
    g[2][1] = -1.0;
    EXPECT_THROW(JointCountTable{g}, ConfigError);
}

TEST(JointTable, CsvLoad) {
    std::stringstream in("# bedrooms 0..4\n1,0,0,0,0,0,0,0,0,0\n0,0,0,0,0,0,0,0,0,0\n0,0,0,0,0,0,0,0,0,0\n0,0,0,0,0,1,0,0,0,0\n0,0,0,0,0,0,0,0,0,0\n");
    const auto t = JointCountTable::from_csv(in);
    EXPECT_DOUBLE_EQ(t.probability(0, 1), 0.5);
    EXPECT_DOUBLE_EQ(t.probability(3, 6), 0.5);
    std::stringstream bad("1,2,3\n");
    EXPECT_THROW(JointCountTable::from_csv(bad), ConfigError);
}

TEST(SampleCounts, DegenerateTable) {
    JointCountTable::Grid g{};
    g[3][5] = 1.0;
    const JointCountTable t(g);
    RandomStream r(1);
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(sample_counts(r, t), (RoomCounts{3, 6}));
}

TEST(SampleCounts, FrequenciesFollowCensus) {
    const auto t = JointCountTable::census_2001();
    RandomStream r(2024);
    std::array<std::array<int, 10>, 5> hist{};
    constexpr int n = 1'000'000;
    for (int i = 0; i < n; ++i) {
        const auto c = sample_counts(r, t);
        ++hist[c.bedrooms][c.rooms - 1];
    }
    EXPECT_NEAR(hist[3][5] / double(n), 0.10599, 0.002);
    EXPECT_EQ(hist[0][4], 0);
    double l1 = 0.0;
    for (int b = 0; b < 5; ++b)
        for (int k = 0; k < 10; ++k) l1 += std::abs(hist[b][k] / double(n) - kCensus[b][k]);
    EXPECT_LT(l1, 0.01);
}

// ---- assign_functions

namespace {

int count_bedrooms(const RoomProgram& p) {
    return static_cast<int>(std::count_if(p.entries.begin(), p.entries.end(), [](const ProgramEntry& e) { return is_bedroom(e.kind); }));
}

std::vector<RoomKind> kinds(const RoomProgram& p) {
    std::vector<RoomKind> out;
    for (const auto& e : p.entries) out.push_back(e.kind);
    return out;
}

// Exhaustive oracle: among all index subsets of the candidate sequence that
// satisfy the count constraints, the lexicographically smallest one.
std::optional<std::vector<RoomKind>> oracle(int bedrooms, int rooms, const std::vector<RoomKind>& priority) {
    const auto pool = priority_pool(priority, bedrooms, rooms);
    const bool bath = needs_bathroom(priority, bedrooms, rooms);
    const int n = static_cast<int>(pool.size());
    std::vector<int> pick;
    std::optional<std::vector<int>> best;
    auto feasible = [&](const std::vector<int>& idx) {
        int beds = 0, living = 0, baths = 0;
        for (int i : idx) {
            beds += is_bedroom(pool[i]);
            living += pool[i] == RoomKind::LivingRoom;
            baths += pool[i] == RoomKind::Bathroom;
        }
        return beds == bedrooms && living == 1 && (!bath || baths >= 1);
    };
    std::function<void(int)> rec = [&](int from) {
        if (best) return;
        if (static_cast<int>(pick.size()) == rooms) {
            if (feasible(pick)) best = pick;
            return;
        }
        for (int i = from; i < n && !best; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    if (!best) return std::nullopt;
    std::vector<RoomKind> living, beds, others;
    for (int i : *best) {
        if (pool[i] == RoomKind::LivingRoom)
            living.push_back(pool[i]);
        else if (is_bedroom(pool[i]))
            beds.push_back(beds.empty() ? RoomKind::MasterBedroom : RoomKind::Bedroom);
        else
            others.push_back(pool[i]);
    }
    living.insert(living.end(), beds.begin(), beds.end());
    living.insert(living.end(), others.begin(), others.end());
    return living;
}

}  // namespace

TEST(AssignFunctions, Examples) {
    const auto pri = GenConfig::defaults().priority;
    EXPECT_EQ(kinds(assign_functions(0, 1, pri)), (std::vector{RoomKind::LivingRoom}));
    EXPECT_EQ(kinds(assign_functions(2, 4, pri)),
              (std::vector{RoomKind::LivingRoom, RoomKind::MasterBedroom, RoomKind::Bedroom, RoomKind::Bathroom}));
    const auto big = assign_functions(4, 10, pri);
    EXPECT_EQ(count_bedrooms(big), 4);
    EXPECT_EQ(big.entries.size(), 10u);
    EXPECT_THROW(assign_functions(0, 0, pri), std::invalid_argument);
}

TEST(AssignFunctions, MatchesExhaustiveOracle) {
    std::vector<std::vector<RoomKind>> priorities{GenConfig::defaults().priority};
    std::mt19937_64 gen(17);
    for (int k = 0; k < 20; ++k) {
        auto p = GenConfig::defaults().priority;
        std::shuffle(p.begin() + 2, p.end(), gen);
        priorities.push_back(p);
    }
    for (const auto& pri : priorities)
        for (int rooms = 1; rooms <= 5; ++rooms)
            for (int beds = 0; beds < rooms; ++beds) {
                const auto want = oracle(beds, rooms, pri);
                ASSERT_TRUE(want) << beds << "/" << rooms;
                const auto got = assign_functions(beds, rooms, pri);
                EXPECT_EQ(kinds(got), *want) << beds << "/" << rooms;
                EXPECT_EQ(count_bedrooms(got), beds);
            }
}

TEST(AssignFunctions, ProgramInvariantsForEveryTableCell) {
    const auto pri = GenConfig::defaults().priority;
    for (int rooms = 1; rooms <= 10; ++rooms)
        for (int beds = 0; beds < std::min(rooms, 5); ++beds) {
            const auto p = assign_functions(beds, rooms, pri);
            EXPECT_EQ(static_cast<int>(p.entries.size()), rooms);
            EXPECT_EQ(count_bedrooms(p), beds);
            EXPECT_EQ(std::count_if(p.entries.begin(), p.entries.end(), [](auto& e) { return e.kind == RoomKind::LivingRoom; }), 1);
        }
}

TEST(SampleAreas, WithinTableBounds) {
    const auto cfg = GenConfig::defaults();
    RandomStream r(77);
    for (int i = 0; i < 2000; ++i) {
        const auto p = sample_areas(assign_functions(4, 10, cfg.priority), r, cfg);
        for (const auto& e : p.entries) {
            if (is_bedroom(e.kind)) {
                EXPECT_GE(e.target_area, 8.0);
                EXPECT_LE(e.target_area, 18.0);
            } else {
                EXPECT_GE(e.target_area, 3.0);
                EXPECT_LE(e.target_area, 11.0);
            }
        }
    }
}

TEST(SampleAreas, PointMass) {
    auto cfg = GenConfig::defaults();
    for (auto& [k, d] : cfg.area) d = {12.0, 12.0};
    RandomStream r(1);
    for (const auto& e : sample_areas(assign_functions(2, 6, cfg.priority), r, cfg).entries) EXPECT_EQ(e.target_area, 12.0);
}

TEST(SampleAreas, MissingDistribution) {
    auto cfg = GenConfig::defaults();
    cfg.area.erase(RoomKind::Kitchen);
    RandomStream r(1);
    EXPECT_THROW(sample_areas(assign_functions(1, 4, cfg.priority), r, cfg), ConfigError);
}

TEST(Footprint, Algebra) {
    const auto a = footprint_with_aspect(32.0, 2.0);
    EXPECT_NEAR(a.width, 8.0, 1e-12);
    EXPECT_NEAR(a.height, 4.0, 1e-12);
    const auto b = footprint_with_aspect(25.0, 1.0);
    EXPECT_NEAR(b.width, 5.0, 1e-12);
    EXPECT_NEAR(b.height, 5.0, 1e-12);
}

TEST(Footprint, AreaAndAspect) {
    const auto cfg = GenConfig::defaults();
    RandomStream r(8);
    for (int i = 0; i < 10000; ++i) {
        auto p = sample_areas(assign_functions(2, 6, cfg.priority), r, cfg);
        const Rect f = derive_footprint(p, r, cfg);
        EXPECT_NEAR(f.area(), p.total_area(), 1e-6 * p.total_area());
        EXPECT_GE(aspect_ratio(f), 1.0);
        EXPECT_LE(aspect_ratio(f), 2.0);
        const GridRect g = snap_footprint(f);
        EXPECT_LE(aspect_ratio(g), 2.0);
    }
}

TEST(Footprint, CapRedraws) {
    auto cfg = GenConfig::defaults();
    cfg.footprint_aspect = {1.0, 3.0};
    cfg.max_footprint_aspect = 1.5;
    RandomStream r(8);
    for (int i = 0; i < 1000; ++i) {
        const auto p = sample_areas(assign_functions(1, 3, cfg.priority), r, cfg);
        EXPECT_LE(aspect_ratio(derive_footprint(p, r, cfg)), 1.5 + 1e-12);
    }
}
