#include <doctest.h>

#include "risnet/config.hpp"
#include "risnet/errors.hpp"
#include "risnet/scenario.hpp"

using namespace risnet;

TEST_CASE("sample_scenario produces the requested node counts") {
    SimConfig cfg;
    Scenario sc = cfg.sample(42);
    CHECK(sc.num_ue() == 10);
    CHECK(sc.num_uav() == 7);
    CHECK(sc.num_nodes() == 17);
}

TEST_CASE("sample_scenario is a pure function of the seed") {
    Area area{120.0, 80.0};
    RisGeometry ris;
    RadioParams radio;
    Scenario a = sample_scenario(1, 1, area, 50.0, ris, radio, 7);
    Scenario b = sample_scenario(1, 1, area, 50.0, ris, radio, 7);
    CHECK(a.ue_positions[0] == b.ue_positions[0]);
    CHECK(a.uav_positions[0] == b.uav_positions[0]);

    Scenario c = sample_scenario(2, 4, area, 50.0, ris, radio, 1);
    Scenario d = sample_scenario(2, 4, area, 50.0, ris, radio, 2);
    bool any_diff = false;
    for (int u = 0; u < 2; ++u)
        if (c.ue_positions[u] != d.ue_positions[u]) any_diff = true;
    for (int a2 = 0; a2 < 4; ++a2)
        if (c.uav_positions[a2] != d.uav_positions[a2]) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("sampled coordinates respect the area and altitude") {
    Area area{60.0, 200.0};
    Scenario sc = sample_scenario(50, 20, area, 35.0, RisGeometry{},
                                  RadioParams{}, 99);
    for (const auto& ue : sc.ue_positions) {
        CHECK(ue.x() >= 0.0);
        CHECK(ue.x() <= area.width);
        CHECK(ue.y() >= 0.0);
        CHECK(ue.y() <= area.height);
    }
    for (const auto& uav : sc.uav_positions) {
        CHECK(uav.x() >= 0.0);
        CHECK(uav.x() <= area.width);
        CHECK(uav.y() >= 0.0);
        CHECK(uav.y() <= area.height);
        CHECK(uav.z() == 35.0);
    }
}

TEST_CASE("sample_scenario rejects bad inputs") {
    CHECK_THROWS_AS(sample_scenario(0, 1, Area{}, 50.0, RisGeometry{},
                                    RadioParams{}, 1),
                    ConfigError);
    CHECK_THROWS_AS(sample_scenario(1, 0, Area{}, 50.0, RisGeometry{},
                                    RadioParams{}, 1),
                    ConfigError);
    CHECK_THROWS_AS(sample_scenario(1, 1, Area{-5.0, 10.0}, 50.0,
                                    RisGeometry{}, RadioParams{}, 1),
                    ConfigError);
}

TEST_CASE("validate accepts the default scenario") {
    Scenario sc = SimConfig{}.sample(3);
    CHECK(validate(sc).empty());
}

TEST_CASE("validate reports the offending field") {
    Scenario sc = SimConfig{}.sample(3);

    SUBCASE("alpha") {
        sc.radio.alpha = 0.0;
        auto v = validate(sc);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("alpha") != std::string::npos);
    }
    SUBCASE("negative UAV altitude") {
        sc.uav_positions[2].z() = -5.0;
        auto v = validate(sc);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("UAV 3") != std::string::npos);
    }
    SUBCASE("several violations accumulate") {
        sc.radio.p = -1.0;
        sc.ris.dr = 0.0;
        CHECK(validate(sc).size() == 2);
    }
}

TEST_CASE("config defaults match the documented setup") {
    SimConfig cfg;
    CHECK(cfg.num_ue == 10);
    CHECK(cfg.num_uav == 7);
    CHECK(cfg.area.width == 150.0);
    CHECK(cfg.area.height == 150.0);
    CHECK(cfg.uav_altitude == 50.0);
    CHECK(cfg.ris.position == Eigen::Vector3d(35.0, 50.0, 20.0));
    CHECK(cfg.ris.M() == 100);
    CHECK(cfg.ris.dr == 0.05);
    CHECK(cfg.radio.p == 1.0);
    CHECK(cfg.radio.P == 5.0);
    CHECK(cfg.radio.N0 == doctest::Approx(1e-16).epsilon(1e-12));
    CHECK(cfg.radio.alpha == 4.0);
    CHECK(cfg.radio.fc == 3e9);
    CHECK(cfg.radio.beta0 == 1e-6);
    CHECK(cfg.radio.gamma0_ue == 85.0);
    CHECK(cfg.radio.gamma0_uav == 80.0);
    CHECK(cfg.radio.gamma0_ris == 30.0);
    CHECK_FALSE(cfg.radio.D0.has_value());
}

TEST_CASE("config parsing") {
    SUBCASE("overrides and dBm conversion") {
        SimConfig cfg = parse_config(R"({
            "num_ue": 3, "num_uav": 2, "area_m": [100, 50],
            "uav_altitude_m": 40, "seed": 9, "N0": -120,
            "gamma0_ris": 10, "ris": {"position": [1, 2, 3], "Mr": 4}
        })");
        CHECK(cfg.num_ue == 3);
        CHECK(cfg.num_uav == 2);
        CHECK(cfg.area.width == 100.0);
        CHECK(cfg.area.height == 50.0);
        CHECK(cfg.uav_altitude == 40.0);
        CHECK(cfg.seed == 9);
        CHECK(cfg.radio.N0 == doctest::Approx(1e-15).epsilon(1e-12));
        CHECK(cfg.radio.gamma0_ris == 10.0);
        CHECK(cfg.ris.position == Eigen::Vector3d(1.0, 2.0, 3.0));
        CHECK(cfg.ris.Mr == 4);
        CHECK(cfg.ris.Mc == 10);
    }
    SUBCASE("scalar area means a square") {
        SimConfig cfg = parse_config(R"({"area_m": 80})");
        CHECK(cfg.area.width == 80.0);
        CHECK(cfg.area.height == 80.0);
    }
    SUBCASE("bad JSON") {
        CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
    }
    SUBCASE("unknown key") {
        CHECK_THROWS_AS(parse_config(R"({"num_eu": 3})"), ConfigError);
    }
    SUBCASE("invalid values") {
        CHECK_THROWS_AS(parse_config(R"({"num_ue": 0})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"num_ue": 2.5})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"alpha": -4})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"area_m": [1, 2, 3]})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"seed": -1})"), ConfigError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_config("/nonexistent/path.json"), ConfigError);
    }
}
