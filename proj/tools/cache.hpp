#ifndef FFACTOR_TOOLS_CACHE_HPP_
#define FFACTOR_TOOLS_CACHE_HPP_

#include <atomic>
#include <filesystem>
#include <mutex>
#include <string>

#include "ffactor/homcount.hpp"

namespace ffactor::cli {

  // One file per entry, named by the SHA-256 of the query content.
  class DirectoryCache final : public CountCache {
   public:
    explicit DirectoryCache(std::filesystem::path dir);

    std::optional<Entry> lookup(CountQuery const& query) override;
    void                 store(CountQuery const& query, Entry entry) override;

    std::uint64_t hits() const noexcept {
      return _hits.load();
    }
    std::uint64_t misses() const noexcept {
      return _misses.load();
    }

    static std::string key(CountQuery const& query);

   private:
    std::filesystem::path      _dir;
    std::mutex                 _mutex;
    std::atomic<std::uint64_t> _hits{0};
    std::atomic<std::uint64_t> _misses{0};
  };

}  // namespace ffactor::cli

#endif  // FFACTOR_TOOLS_CACHE_HPP_
