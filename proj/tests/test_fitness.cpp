#include <catch2/catch_amalgamated.hpp>

#include "yardalloc/fitness.hpp"

using namespace yardalloc;

namespace {

Instance make_instance(YardConfig cfg, std::vector<Container> cs) {
    Instance inst;
    inst.config = cfg;
    inst.containers = std::move(cs);
    return inst;
}

}  // namespace

TEST_CASE("priority is the reciprocal delivery date") {
    REQUIRE(priority(1) == 1.0);
    REQUIRE(priority(2) == 0.5);
    REQUIRE(priority(4) == 0.25);
    REQUIRE_THROWS_AS(priority(0), date_domain_error);
    REQUIRE_THROWS_AS(priority(-3), date_domain_error);
}

TEST_CASE("fitness mode parsing") {
    REQUIRE(fitness_mode_from_string("blocking") == FitnessMode::blocking);
    REQUIRE(fitness_mode_from_string("above") == FitnessMode::above);
    REQUIRE_THROWS_AS(fitness_mode_from_string("bogus"), parse_error);
}

TEST_CASE("rehandle counts for a three-high stack") {
    YardConfig cfg{1, 1, 3, 0, 1};
    Instance inst = make_instance(cfg, {{1, ContainerType::dry, 1},
                                        {2, ContainerType::dry, 3},
                                        {3, ContainerType::dry, 2}});
    ContainerIndex index(inst);
    Layout layout(cfg);
    layout.place(1, Coord{1, 1, 1, 1});  // A, d=1
    layout.place(2, Coord{1, 1, 2, 1});  // B, d=3
    layout.place(3, Coord{1, 1, 3, 1});  // C, d=2

    REQUIRE(rehandle_count(layout, index, 1, FitnessMode::above) == 2);
    REQUIRE(rehandle_count(layout, index, 1, FitnessMode::blocking) == 2);
    REQUIRE(rehandle_count(layout, index, 2, FitnessMode::above) == 1);
    REQUIRE(rehandle_count(layout, index, 2, FitnessMode::blocking) == 0);
    REQUIRE(rehandle_count(layout, index, 3, FitnessMode::above) == 0);
    REQUIRE(rehandle_count(layout, index, 3, FitnessMode::blocking) == 0);
}

TEST_CASE("rehandle count: earlier-dated container above does not block") {
    YardConfig cfg{1, 1, 2, 0, 1};
    Instance inst = make_instance(cfg, {{1, ContainerType::dry, 3},
                                        {2, ContainerType::dry, 1}});
    ContainerIndex index(inst);
    Layout layout(cfg);
    layout.place(1, Coord{1, 1, 1, 1});
    layout.place(2, Coord{1, 1, 2, 1});
    REQUIRE(rehandle_count(layout, index, 1, FitnessMode::above) == 1);
    REQUIRE(rehandle_count(layout, index, 1, FitnessMode::blocking) == 0);
}

TEST_CASE("rehandle count needs a placed container") {
    YardConfig cfg{1, 1, 2, 0, 1};
    Instance inst = make_instance(cfg, {{1, ContainerType::dry, 3}});
    ContainerIndex index(inst);
    Layout layout(cfg);
    REQUIRE_THROWS_AS(rehandle_count(layout, index, 1, FitnessMode::blocking), lookup_error);
}

TEST_CASE("layout fitness hand examples") {
    YardConfig cfg{2, 1, 2, 0, 1};

    SECTION("ground-tier layouts cost nothing") {
        Instance inst = make_instance(cfg, {{1, ContainerType::dry, 2},
                                            {2, ContainerType::dry, 5}});
        Layout layout(cfg);
        layout.place(1, Coord{1, 1, 1, 1});
        layout.place(2, Coord{2, 1, 1, 1});
        REQUIRE(layout_fitness(layout, inst, FitnessMode::blocking) == 0.0);
        REQUIRE(layout_fitness(layout, inst, FitnessMode::above) == 0.0);
    }
    SECTION("later date on top blocks in both modes") {
        Instance inst = make_instance(cfg, {{1, ContainerType::dry, 2},
                                            {2, ContainerType::dry, 5}});
        Layout layout(cfg);
        layout.place(1, Coord{1, 1, 1, 1});
        layout.place(2, Coord{1, 1, 2, 1});
        REQUIRE(layout_fitness(layout, inst, FitnessMode::blocking) == 0.5);
        REQUIRE(layout_fitness(layout, inst, FitnessMode::above) == 0.5);
    }
    SECTION("earlier date on top blocks only in above mode") {
        Instance inst = make_instance(cfg, {{1, ContainerType::dry, 5},
                                            {2, ContainerType::dry, 2}});
        Layout layout(cfg);
        layout.place(1, Coord{1, 1, 1, 1});
        layout.place(2, Coord{1, 1, 2, 1});
        REQUIRE(layout_fitness(layout, inst, FitnessMode::blocking) == 0.0);
        REQUIRE(layout_fitness(layout, inst, FitnessMode::above) == 0.2);
    }
}

TEST_CASE("layout fitness demands completeness") {
    YardConfig cfg{2, 1, 2, 0, 1};
    Instance inst = make_instance(cfg, {{1, ContainerType::dry, 2},
                                        {2, ContainerType::dry, 5}});
    Layout layout(cfg);
    layout.place(1, Coord{1, 1, 1, 1});
    REQUIRE_THROWS_AS(layout_fitness(layout, inst, FitnessMode::blocking),
                      incomplete_layout_error);
}

TEST_CASE("retrieval simulation hand examples") {
    YardConfig cfg{1, 1, 3, 0, 1};

    SECTION("two blockers over the earliest container") {
        Instance inst = make_instance(cfg, {{1, ContainerType::dry, 1},
                                            {2, ContainerType::dry, 3},
                                            {3, ContainerType::dry, 2}});
        Layout layout(cfg);
        layout.place(1, Coord{1, 1, 1, 1});
        layout.place(2, Coord{1, 1, 2, 1});
        layout.place(3, Coord{1, 1, 3, 1});
        auto counts = retrieval_oracle(layout, inst);
        REQUIRE(counts.at(1) == 2);
        REQUIRE(counts.at(2) == 0);
        REQUIRE(counts.at(3) == 0);
    }
    SECTION("earlier container on top leaves first, free") {
        Instance inst = make_instance(cfg, {{1, ContainerType::dry, 3},
                                            {2, ContainerType::dry, 1}});
        Layout layout(cfg);
        layout.place(1, Coord{1, 1, 1, 1});
        layout.place(2, Coord{1, 1, 2, 1});
        auto counts = retrieval_oracle(layout, inst);
        REQUIRE(counts.at(1) == 0);
        REQUIRE(counts.at(2) == 0);
    }
    SECTION("equal dates retrieve top-down at no cost") {
        Instance inst = make_instance(cfg, {{1, ContainerType::dry, 2},
                                            {2, ContainerType::dry, 2}});
        Layout layout(cfg);
        layout.place(1, Coord{1, 1, 1, 1});
        layout.place(2, Coord{1, 1, 2, 1});
        auto counts = retrieval_oracle(layout, inst);
        REQUIRE(counts.at(1) == 0);
        REQUIRE(counts.at(2) == 0);
    }
}

TEST_CASE("retrieval simulation rejects broken layouts") {
    YardConfig cfg{1, 1, 3, 0, 1};
    Instance inst = make_instance(cfg, {{1, ContainerType::dry, 1}});
    Layout layout(cfg);
    layout.place(1, Coord{1, 1, 2, 1});  // floating
    REQUIRE_THROWS_AS(retrieval_oracle(layout, inst), infeasible_layout_error);
}

TEST_CASE("oracle fitness equals geometric blocking fitness on a mixed yard") {
    YardConfig cfg{2, 2, 3, 0, 1};
    Instance inst = make_instance(cfg, {{1, ContainerType::dry, 4},
                                        {2, ContainerType::dry, 2},
                                        {3, ContainerType::dry, 9},
                                        {4, ContainerType::dry, 2},
                                        {5, ContainerType::dry, 7}});
    Layout layout(cfg);
    layout.place(1, Coord{1, 1, 1, 1});
    layout.place(2, Coord{1, 1, 2, 1});
    layout.place(3, Coord{1, 1, 3, 1});
    layout.place(4, Coord{2, 1, 1, 1});
    layout.place(5, Coord{2, 1, 2, 1});
    REQUIRE(oracle_fitness(layout, inst) ==
            layout_fitness(layout, inst, FitnessMode::blocking));
}
