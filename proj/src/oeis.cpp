#include "qew/oeis.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace qew {

namespace {

std::string joined_terms(const std::vector<BigInt>& prefix) {
    std::ostringstream os;
    for (size_t i = 0; i < prefix.size(); ++i) {
        if (i) os << ",";
        os << prefix[i].get_str();
    }
    return os.str();
}

std::vector<OeisEntry> parse_results(const std::string& body) {
    nlohmann::json doc = nlohmann::json::parse(body);
    const nlohmann::json* results = nullptr;
    if (doc.is_array())
        results = &doc;
    else if (doc.contains("results") && doc["results"].is_array())
        results = &doc["results"];
    std::vector<OeisEntry> out;
    if (results == nullptr) return out;
    for (const auto& item : *results) {
        OeisEntry e;
        if (item.contains("number")) {
            long num = item["number"].get<long>();
            char buf[16];
            std::snprintf(buf, sizeof(buf), "A%06ld", num);
            e.id = buf;
        }
        if (item.contains("name")) e.name = item["name"].get<std::string>();
        if (!e.id.empty()) out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<OeisEntry> oeis_lookup(const std::vector<BigInt>& prefix, bool online) {
    if (!online)
        throw std::runtime_error("OEIS lookup needs networking enabled; pass --online");
    if (const char* off = std::getenv("QEW_OFFLINE"); off != nullptr && off[0] != '\0' && off[0] != '0')
        throw std::runtime_error("networking disabled by QEW_OFFLINE");
    if (prefix.size() < 6) throw std::invalid_argument("OEIS lookup requires at least 6 terms");

    std::string base = "https://oeis.org";
    if (const char* env = std::getenv("QEW_OEIS_BASE_URL"); env != nullptr && env[0] != '\0') base = env;
    std::string path = "/search?q=" + joined_terms(prefix) + "&fmt=json";

    // one retry with backoff, no more
    std::string failure;
    for (int attempt = 0; attempt < 2; ++attempt) {
        if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(500));
        httplib::Client client(base);
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        client.set_follow_location(true);
        auto res = client.Get(path);
        if (!res) {
            failure = "connection failed (" + httplib::to_string(res.error()) + ")";
            continue;
        }
        if (res->status != 200) {
            failure = "HTTP status " + std::to_string(res->status);
            continue;
        }
        try {
            return parse_results(res->body);
        } catch (const nlohmann::json::exception& e) {
            failure = std::string("response parse failure: ") + e.what();
        }
    }
    throw std::runtime_error("OEIS request failed: " + failure);
}

}  // namespace qew
