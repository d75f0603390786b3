#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "pdmwell/reference_data.hpp"

using namespace pdmwell;

TEST_SUITE("reference_data") {

TEST_CASE("tables have the full parameter grid") {
    CHECK(reference_data_version() == 1);
    CHECK(table_two().size() == 21);
    CHECK(table_three().size() == 21);
    // 7 (n, kappa) families x 3 widths each
    for (double a : {2.0, 4.0, 6.0}) {
        int count = 0;
        for (const auto& d : table_two())
            if (d.a == a) ++count;
        CHECK(count == 7);
    }
}

TEST_CASE("pi-form evaluation") {
    const PiForm f{12.0, 1.0, 48.0};
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(f.value() == doctest::Approx((12.0 + pi2) / 48.0).epsilon(1e-15));
    CHECK(PiForm{16.0, 0.0, 3.0}.value() == doctest::Approx(16.0 / 3.0));
}

TEST_CASE("entropy errata are flagged with derived values and notes") {
    int errata = 0;
    for (const auto& d : table_two()) {
        if (!d.erratum) continue;
        ++errata;
        CHECK_FALSE(d.note.empty());
        const bool first = (d.n == 2 && d.kappa == 1 && d.a == 6.0);
        const bool second = (d.n == 2 && d.kappa == 2 && d.a == 4.0);
        CHECK((first || second));
        if (first) {
            CHECK(d.S_x_printed == doctest::Approx(0.6861));
            CHECK(d.S_x_derived == doctest::Approx(-0.6861));
        }
        if (second) {
            CHECK(d.S_x_printed == doctest::Approx(-0.07806));
            CHECK(d.S_x_derived == doctest::Approx(-0.7806));
        }
    }
    CHECK(errata == 2);
}

TEST_CASE("fisher errata: the corrected variance denominator") {
    int errata = 0;
    for (const auto& d : table_three()) {
        if (!d.erratum) continue;
        ++errata;
        CHECK(d.n == 1);
        CHECK(d.kappa == 0);
        CHECK(d.a == 4.0);
        // corrected closed form uses denominator 192 (1/a^2 scaling), not 196
        CHECK(d.var_x.D == doctest::Approx(192.0));
        CHECK_FALSE(d.note.empty());
    }
    CHECK(errata == 1);
}

TEST_CASE("entropy sums are constant per family") {
    for (const auto& d : table_two()) {
        for (const auto& e : table_two()) {
            if (d.n == e.n && d.kappa == e.kappa)
                CHECK(d.sum_printed == doctest::Approx(e.sum_printed));
        }
    }
}

TEST_CASE("fisher families obey the printed scaling structure") {
    // F_x scales as a^2 and var_x as 1/a^2 across each family
    for (const auto& d : table_three()) {
        for (const auto& e : table_three()) {
            if (d.n != e.n || d.kappa != e.kappa) continue;
            const double r = (d.a * d.a) / (e.a * e.a);
            CHECK(d.F_x.value() == doctest::Approx(r * e.F_x.value()).epsilon(1e-12));
            CHECK(d.var_x.value() ==
                  doctest::Approx(e.var_x.value() / r).epsilon(1e-12));
            CHECK(d.F_p.value() == doctest::Approx(e.F_p.value() / r).epsilon(1e-12));
            CHECK(d.var_p.value() ==
                  doctest::Approx(r * e.var_p.value()).epsilon(1e-12));
        }
    }
}

TEST_CASE("raw json parses and matches the accessors") {
    const auto j = nlohmann::json::parse(reference_data_json());
    CHECK(j.at("version").get<int>() == reference_data_version());
    CHECK(j.at("table2").size() == table_two().size());
    CHECK(j.at("table3").size() == table_three().size());
}

}  // TEST_SUITE
