#include "helpers.hpp"

#include <atomic>

#include "symfun/parallel.hpp"
#include "symfun/verify.hpp"

TEST_CASE("parallel_for visits every index once") {
    for (int threads : {1, 4}) {
        sf::set_thread_count(threads);
        std::vector<std::atomic<int>> hits(200);
        sf::parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
        for (auto& h : hits) CHECK(h.load() == 1);
    }
    sf::set_thread_count(0);
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
    sf::set_thread_count(4);
    try {
        sf::parallel_for(50, [](std::size_t i) {
            if (i == 7 || i == 31) throw std::runtime_error("case " + std::to_string(i));
        });
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "case 7");
    }
    sf::set_thread_count(0);
}

TEST_CASE("nested parallel_for runs inline") {
    sf::set_thread_count(3);
    std::atomic<int> total{0};
    sf::parallel_for(4, [&](std::size_t) { sf::parallel_for(5, [&](std::size_t) { total++; }); });
    CHECK(total.load() == 20);
    sf::set_thread_count(0);
}

TEST_CASE("suite results do not depend on the thread count") {
    CHECK(sf::has_suite("fgl-axioms"));
    CHECK_FALSE(sf::has_suite("nope"));
    CHECK(sf::suite_catalog().size() == 8);
    sf::SuiteOptions opt;
    opt.cap = 5;
    sf::set_thread_count(1);
    auto one = sf::run_suite("fgl-axioms", opt);
    sf::set_thread_count(4);
    auto four = sf::run_suite("fgl-axioms", opt);
    sf::set_thread_count(0);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].key == four[i].key);
        CHECK(one[i].pass);
        CHECK(four[i].pass);
    }
    CHECK_THROWS(sf::run_suite("nope"));
}
