#include "cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <chrono>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ffactor::cli {

  namespace {

    constexpr int cache_version = 1;

    std::string sha256_hex(std::string const& data) {
      std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
      unsigned char digest[EVP_MAX_MD_SIZE];
      unsigned int  len = 0;
      if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1
          || EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1
          || EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
        throw std::runtime_error("SHA-256 failed");
      }
      static constexpr char hex[] = "0123456789abcdef";
      std::string           out;
      for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
      }
      return out;
    }

  }  // namespace

  DirectoryCache::DirectoryCache(std::filesystem::path dir) : _dir(std::move(dir)) {
    std::filesystem::create_directories(_dir);
  }

  std::string DirectoryCache::key(CountQuery const& query) {
    std::ostringstream s;
    s << "ffactor-count v" << cache_version << '\n' << query.presentation.str() << '\n';
    for (auto const& c : query.constraints) {
      s << c.word.str() << " -> " << c.target << '\n';
    }
    s << (query.epimorphisms ? "epi" : "hom") << '\n' << query.group.order() << ':';
    for (auto x : query.group.table()) {
      s << x << ',';
    }
    return sha256_hex(s.str());
  }

  std::optional<CountCache::Entry> DirectoryCache::lookup(CountQuery const& query) {
    auto const    path = _dir / (key(query) + ".json");
    std::lock_guard lock(_mutex);
    std::ifstream in(path);
    if (!in) {
      ++_misses;
      return std::nullopt;
    }
    auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || j.value("version", 0) != cache_version) {
      ++_misses;
      return std::nullopt;
    }
    ++_hits;
    return Entry{j.at("total").get<std::uint64_t>(), j.at("nodes").get<std::uint64_t>()};
  }

  void DirectoryCache::store(CountQuery const& query, Entry entry) {
    auto const     name = key(query);
    nlohmann::json j;
    j["version"]   = cache_version;
    j["total"]     = entry.total;
    j["nodes"]     = entry.nodes;
    j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    std::lock_guard lock(_mutex);
    auto const      tmp = _dir / (name + "." + std::to_string(::getpid()) + ".tmp");
    {
      std::ofstream out(tmp);
      out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, _dir / (name + ".json"));
  }

}  // namespace ffactor::cli
