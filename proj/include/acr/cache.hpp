#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace acr {

/// Optional on-disk key/value store, keyed by canonical graph6. A missing,
/// unreadable or wrong-version file is treated as empty. Values are only a
/// shortcut: callers must produce the same output with or without them.
class Cache {
public:
    static constexpr const char* kHeader = "acr-cache v1";

    Cache() = default;
    explicit Cache(std::string path);

    bool enabled() const { return !path_.empty(); }
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value);
    /// Writes through a temporary file and rename, so readers never see half a file.
    void flush();

private:
    std::string path_;
    std::map<std::string, std::string> entries_;
    bool dirty_ = false;
    mutable std::mutex mu_;
};

}  // namespace acr
