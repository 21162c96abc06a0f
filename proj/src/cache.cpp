#include "acr/cache.hpp"

#include <filesystem>
#include <fstream>

#include "acr/error.hpp"

namespace acr {

Cache::Cache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    if (!in || !std::getline(in, line) || line != kHeader) return;
    while (std::getline(in, line)) {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        entries_[line.substr(0, tab)] = line.substr(tab + 1);
    }
}

std::optional<std::string> Cache::get(const std::string& key) const {
    std::lock_guard lock(mu_);
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void Cache::put(const std::string& key, const std::string& value) {
    if (!enabled()) return;
    if (key.find_first_of("\t\n") != std::string::npos || value.find('\n') != std::string::npos) {
        throw ParameterError("cache entries must not contain tabs or newlines in keys");
    }
    std::lock_guard lock(mu_);
    auto [it, fresh] = entries_.try_emplace(key, value);
    if (!fresh && it->second == value) return;
    it->second = value;
    dirty_ = true;
}

void Cache::flush() {
    std::lock_guard lock(mu_);
    if (!enabled() || !dirty_) return;
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ParameterError("cannot write cache " + tmp);
        out << kHeader << '\n';
        for (const auto& [k, v] : entries_) out << k << '\t' << v << '\n';
    }
    std::filesystem::rename(tmp, path_);
    dirty_ = false;
}

}  // namespace acr
