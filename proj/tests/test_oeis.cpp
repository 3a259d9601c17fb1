#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "qew/oeis.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

using namespace qew;

namespace {

std::vector<BigInt> terms(const std::vector<long>& v) {
    std::vector<BigInt> out;
    for (long t : v) out.emplace_back(t);
    return out;
}

// Serves a canned OEIS-style response on loopback and points
// QEW_OEIS_BASE_URL at itself.
class FakeOeis {
public:
    explicit FakeOeis(int fail_first = 0) : fail_first_(fail_first) {
        server_.Get("/search", [this](const httplib::Request& req, httplib::Response& res) {
            ++hits_;
            last_query_ = req.get_param_value("q");
            if (fail_first_ > 0) {
                --fail_first_;
                res.status = 500;
                return;
            }
            res.set_content(
                R"({"results":[{"number":1006,"name":"Motzkin numbers"},)"
                R"({"number":8549,"name":"Dyck path area"}]})",
                "application/json");
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
        base_url_ = "http://127.0.0.1:" + std::to_string(port_);
        setenv("QEW_OEIS_BASE_URL", base_url_.c_str(), 1);
    }

    ~FakeOeis() {
        server_.stop();
        thread_.join();
        unsetenv("QEW_OEIS_BASE_URL");
    }

    bool ok() const { return port_ > 0; }
    int hits() const { return hits_; }
    std::string last_query() const { return last_query_; }

private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = -1;
    std::atomic<int> fail_first_{0};
    std::atomic<int> hits_{0};
    std::string last_query_;
    std::string base_url_;
};

}  // namespace

TEST_CASE("offline and validation errors") {
    unsetenv("QEW_OFFLINE");
    CHECK_THROWS_AS(oeis_lookup(terms({1, 1, 2, 4, 9, 21, 51}), false), std::runtime_error);
    CHECK_THROWS_AS(oeis_lookup(terms({1, 1, 2}), true), std::invalid_argument);
    setenv("QEW_OFFLINE", "1", 1);
    CHECK_THROWS_AS(oeis_lookup(terms({1, 1, 2, 4, 9, 21, 51}), true), std::runtime_error);
    unsetenv("QEW_OFFLINE");
}

TEST_CASE("lookup against a local endpoint") {
    FakeOeis fake;
    REQUIRE(fake.ok());
    auto entries = oeis_lookup(terms({1, 1, 2, 4, 9, 21, 51}), true);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].id == "A001006");
    CHECK(entries[0].name == "Motzkin numbers");
    CHECK(entries[1].id == "A008549");
    CHECK(fake.last_query() == "1,1,2,4,9,21,51");
}

TEST_CASE("a failing request is retried exactly once") {
    SUBCASE("one failure then success") {
        FakeOeis fake(1);
        REQUIRE(fake.ok());
        auto entries = oeis_lookup(terms({1, 1, 2, 4, 9, 21, 51}), true);
        CHECK(entries.size() == 2);
        CHECK(fake.hits() == 2);
    }
    SUBCASE("persistent failure surfaces the status") {
        FakeOeis fake(99);
        REQUIRE(fake.ok());
        try {
            oeis_lookup(terms({1, 1, 2, 4, 9, 21, 51}), true);
            FAIL_CHECK("expected failure");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("500") != std::string::npos);
        }
        CHECK(fake.hits() == 2);  // no retry storm
    }
}

TEST_CASE("bare-array responses also parse") {
    httplib::Server server;
    server.Get("/search", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"([{"number":108,"name":"Catalan numbers"}])", "application/json");
    });
    int port = server.bind_to_any_port("127.0.0.1");
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    std::string base = "http://127.0.0.1:" + std::to_string(port);
    setenv("QEW_OEIS_BASE_URL", base.c_str(), 1);
    auto entries = oeis_lookup(terms({1, 1, 2, 5, 14, 42}), true);
    server.stop();
    th.join();
    unsetenv("QEW_OEIS_BASE_URL");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].id == "A000108");
}
