#include "lakecov/store.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace lakecov {

namespace {

void check_key(const std::string& key) {
  if (key.empty()) throw ContractError("empty object key");
  if (key.front() == '/' || key.find("//") != std::string::npos)
    throw ContractError("bad object key: " + key);
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t next = key.find('/', pos);
    if (next == std::string::npos) next = key.size();
    std::string seg = key.substr(pos, next - pos);
    if (seg == "." || seg == "..") throw ContractError("bad object key: " + key);
    pos = next + 1;
  }
}

}  // namespace

Tick ObjectStore::put(const std::string& key, std::string bytes) {
  check_key(key);
  backend_put(key, bytes);
  std::lock_guard lock(mu_);
  Tick t = ++tick_;
  ticks_[key] = t;
  return t;
}

std::string ObjectStore::get(const std::string& key) {
  {
    std::lock_guard lock(mu_);
    if (!ticks_.contains(key)) throw NotFoundError("no such object: " + key);
  }
  auto bytes = backend_get(key);
  if (!bytes) throw NotFoundError("no such object: " + key);
  reads_.fetch_add(1, std::memory_order_relaxed);
  if (latency_.count() > 0) std::this_thread::sleep_for(latency_);
  return std::move(*bytes);
}

std::string ObjectStore::peek(const std::string& key) const {
  {
    std::lock_guard lock(mu_);
    if (!ticks_.contains(key)) throw NotFoundError("no such object: " + key);
  }
  auto bytes = backend_get(key);
  if (!bytes) throw NotFoundError("no such object: " + key);
  return std::move(*bytes);
}

bool ObjectStore::remove(const std::string& key) {
  std::lock_guard lock(mu_);
  auto it = ticks_.find(key);
  if (it == ticks_.end()) return false;
  ticks_.erase(it);
  backend_remove(key);
  return true;
}

bool ObjectStore::exists(const std::string& key) const {
  std::lock_guard lock(mu_);
  return ticks_.contains(key);
}

std::vector<std::string> ObjectStore::list(const std::string& prefix) const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (auto it = ticks_.lower_bound(prefix); it != ticks_.end(); ++it) {
    if (it->first.compare(0, prefix.size(), prefix) != 0) break;
    out.push_back(it->first);
  }
  return out;
}

std::vector<std::string> ObjectStore::files_created_after(const std::string& prefix,
                                                          Tick ts) const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (auto it = ticks_.lower_bound(prefix); it != ticks_.end(); ++it) {
    if (it->first.compare(0, prefix.size(), prefix) != 0) break;
    if (it->second > ts) out.push_back(it->first);
  }
  return out;
}

Tick ObjectStore::current_tick() const {
  std::lock_guard lock(mu_);
  return tick_;
}

void ObjectStore::adopt_key(const std::string& key) {
  std::lock_guard lock(mu_);
  ticks_[key] = ++tick_;
}

void MemoryStore::backend_put(const std::string& key, const std::string& bytes) {
  std::lock_guard lock(objects_mu_);
  objects_[key] = bytes;
}

std::optional<std::string> MemoryStore::backend_get(const std::string& key) const {
  std::lock_guard lock(objects_mu_);
  auto it = objects_.find(key);
  if (it == objects_.end()) return std::nullopt;
  return it->second;
}

void MemoryStore::backend_remove(const std::string& key) {
  std::lock_guard lock(objects_mu_);
  objects_.erase(key);
}

DirectoryStore::DirectoryStore(std::string root) : root_(std::move(root)) {
  namespace fs = std::filesystem;
  fs::create_directories(root_);
  std::vector<std::string> existing;
  for (const auto& entry : fs::recursive_directory_iterator(root_)) {
    if (!entry.is_regular_file()) continue;
    existing.push_back(fs::relative(entry.path(), root_).generic_string());
  }
  std::sort(existing.begin(), existing.end());
  for (const auto& key : existing) adopt_key(key);
}

std::string DirectoryStore::path_for(const std::string& key) const {
  return root_ + "/" + key;
}

void DirectoryStore::backend_put(const std::string& key, const std::string& bytes) {
  namespace fs = std::filesystem;
  fs::path p = path_for(key);
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + p.string());
  out.write(bytes.data(), std::streamsize(bytes.size()));
  if (!out) throw Error("short write to " + p.string());
}

std::optional<std::string> DirectoryStore::backend_get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void DirectoryStore::backend_remove(const std::string& key) {
  std::error_code ec;
  std::filesystem::remove(path_for(key), ec);
}

}  // namespace lakecov
