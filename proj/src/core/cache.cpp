#include "core/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace iwk {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

CacheStore::CacheStore() = default;

CacheStore& CacheStore::instance() {
    static CacheStore c;
    return c;
}

void CacheStore::set_directory(const std::string& dir) {
    std::lock_guard lk(mu_);
    dir_ = dir;
    if (!dir_.empty())
        fs::create_directories(dir_);
}

std::string CacheStore::directory() const {
    std::lock_guard lk(mu_);
    return dir_;
}

namespace {
constexpr int kCacheFormat = 1;
}

std::optional<std::string> CacheStore::load(const std::string& key) {
    std::lock_guard lk(mu_);
    if (dir_.empty())
        return std::nullopt;
    fs::path file = fs::path(dir_) / (key + ".json");
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        ordered_json wrap = ordered_json::parse(buf.str());
        if (wrap.at("format").get<int>() != kCacheFormat || wrap.at("key").get<std::string>() != key)
            throw std::runtime_error("format/key mismatch");
        std::string payload = wrap.at("payload").get<std::string>();
        char want[32];
        std::snprintf(want, sizeof want, "%016llx",
                      static_cast<unsigned long long>(fnv1a64(payload)));
        if (wrap.at("digest").get<std::string>() != want)
            throw std::runtime_error("digest mismatch");
        return payload;
    } catch (const std::exception& e) {
        std::cerr << "cache: discarding entry " << file.string() << " (" << e.what() << ")\n";
        std::error_code ec;
        fs::remove(file, ec);
        return std::nullopt;
    }
}

void CacheStore::store(const std::string& key, const std::string& payload) {
    std::lock_guard lk(mu_);
    if (dir_.empty())
        return;
    ordered_json wrap;
    wrap["format"] = kCacheFormat;
    wrap["key"] = key;
    char dig[32];
    std::snprintf(dig, sizeof dig, "%016llx", static_cast<unsigned long long>(fnv1a64(payload)));
    wrap["digest"] = dig;
    wrap["payload"] = payload;
    fs::path file = fs::path(dir_) / (key + ".json");
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << wrap.dump(1) << "\n";
    }
    std::error_code ec;
    fs::rename(tmp, file, ec);
    if (ec)
        std::cerr << "cache: failed to publish " << file.string() << " (" << ec.message() << ")\n";
}

std::vector<mpz_class> teichmuller_table(long p, int precision) {
    static std::mutex table_mu;
    static std::map<long, std::pair<int, std::vector<std::string>>> mem;

    std::lock_guard lk(table_mu);
    auto fit = [&](const std::vector<std::string>& dec, int have) {
        std::vector<mpz_class> out;
        mpz_class mod = p_power(p, precision);
        out.reserve(static_cast<size_t>(p - 1));
        for (const auto& s : dec) {
            mpz_class v(s);
            if (have > precision)
                v %= mod;
            out.push_back(v);
        }
        return out;
    };

    auto it = mem.find(p);
    if (it != mem.end() && it->second.first >= precision)
        return fit(it->second.second, it->second.first);

    std::string key = "teich_p" + std::to_string(p) + "_d" + std::to_string(precision);
    if (auto hit = CacheStore::instance().load(key)) {
        std::vector<std::string> dec;
        std::stringstream ss(*hit);
        std::string tok;
        while (std::getline(ss, tok, ','))
            dec.push_back(tok);
        if (dec.size() == static_cast<size_t>(p - 1)) {
            mem[p] = {precision, dec};
            return fit(dec, precision);
        }
    }

    std::vector<std::string> dec;
    dec.reserve(static_cast<size_t>(p - 1));
    std::string payload;
    for (long r = 1; r < p; ++r) {
        mpz_class w = teichmuller(r, p, precision).residue();
        dec.push_back(w.get_str());
        if (r > 1)
            payload += ",";
        payload += dec.back();
    }
    mem[p] = {precision, dec};
    CacheStore::instance().store(key, payload);
    return fit(dec, precision);
}

} // namespace iwk
