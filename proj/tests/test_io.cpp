#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "qorw/csv.hpp"
#include "qorw/errors.hpp"
#include "qorw/kernel.hpp"
#include "qorw/walk_model.hpp"

using namespace qorw;

TEST_CASE("model json round trip preserves the kernel") {
    for (const auto& model : {example_i(0.4), example_ii(), example_iii(0.3, 0.5, 0.7),
                              example_iv(0.3), v3_model()}) {
        WalkModel back = model_from_json(model_to_json(model));
        CHECK(back.k == model.k);
        CHECK(back.label == model.label);
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                const double f = 2.0 * M_PI * a / 8.0, fp = 2.0 * M_PI * b / 8.0;
                CHECK(std::abs(kernel_at(back, f, fp) - kernel_at(model, f, fp)) < 1e-15);
            }
    }
}

TEST_CASE("model json rejects malformed input") {
    CHECK_THROWS_AS(model_from_json("not json"), structural_error);
    CHECK_THROWS_AS(model_from_json("{\"k\": 0, \"coin_init\": null, \"quantizers\": []}"),
                    structural_error);
    // wrong channel type name
    WalkModel m = example_ii();
    std::string text = model_to_json(m);
    auto pos = text.find("unitary");
    text.replace(pos, 7, "rotary!");
    CHECK_THROWS_AS(model_from_json(text), structural_error);
}

TEST_CASE("csv formats") {
    PositionDistribution d;
    d.n = 1;
    d.m_min = -1;
    d.probs = {0.25, 0.5, 0.25};
    const std::string csv = distribution_csv(d);
    CHECK(csv == "m,probability\n-1,0.25\n0,0.5\n1,0.25\n");

    Histogram h;
    h.edges = {0.0, 0.5, 1.0};
    h.masses = {1.0 / 3.0, 2.0 / 3.0};
    const std::string hc = histogram_csv(h);
    CHECK(hc.substr(0, 24) == "bin_left,bin_right,mass\n");
    // 17 significant digits
    CHECK(hc.find("0.33333333333333331") != std::string::npos);

    CHECK(moments_csv({{2, 1, 0.5}}) == "n,s,value\n2,1,0.5\n");
    CHECK(moment_table_csv({{1, 0.125, 0.125}}) ==
          "s,simulated,quadrature,abs_diff\n1,0.125,0.125,0\n");
    CHECK(convergence_csv({{1000, 1e-2, 2e-2}}) ==
          "N,max_entry_error,predicted_sigma\n1000,0.01,0.02\n");
}

TEST_CASE("atomic file write") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "qorw_io_test";
    fs::create_directories(dir);
    const fs::path target = dir / "out.csv";
    write_file_atomic(target.string(), "a,b\n1,2\n");
    std::ifstream f(target);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(content == "a,b\n1,2\n");
    CHECK_FALSE(fs::exists(dir / "out.csv.tmp"));
    fs::remove_all(dir);
}
