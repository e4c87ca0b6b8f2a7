#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lakecov/error.hpp"

namespace lakecov {

using Tick = std::uint64_t;

// Simulated cloud object store. Every get() counts as one remote read (the
// unit of the cost model) and sleeps the configured latency. Listing and
// creation-time queries are metadata operations and cost nothing. put()
// stamps objects with a process-local monotonic logical tick.
class ObjectStore {
 public:
  virtual ~ObjectStore() = default;

  Tick put(const std::string& key, std::string bytes);
  std::string get(const std::string& key);

  // Non-counting read for setup plumbing (root-index cache warm, CLI loads).
  // Never use it on a path whose reads the cost model should see.
  std::string peek(const std::string& key) const;

  bool remove(const std::string& key);
  bool exists(const std::string& key) const;

  // Keys under prefix, ascending.
  std::vector<std::string> list(const std::string& prefix) const;

  // Keys under prefix created strictly after ts.
  std::vector<std::string> files_created_after(const std::string& prefix, Tick ts) const;

  std::uint64_t read_count() const { return reads_.load(std::memory_order_relaxed); }
  void reset_read_count() { reads_.store(0, std::memory_order_relaxed); }

  void set_latency(std::chrono::microseconds us) { latency_ = us; }
  std::chrono::microseconds latency() const { return latency_; }

  Tick current_tick() const;

 protected:
  // Backends see keys only after base-class validation.
  virtual void backend_put(const std::string& key, const std::string& bytes) = 0;
  virtual std::optional<std::string> backend_get(const std::string& key) const = 0;
  virtual void backend_remove(const std::string& key) = 0;

  // Pre-registers an existing object (directory scan at open).
  void adopt_key(const std::string& key);

 private:
  mutable std::mutex mu_;
  std::map<std::string, Tick> ticks_;
  Tick tick_ = 0;
  std::atomic<std::uint64_t> reads_{0};
  std::chrono::microseconds latency_{0};
};

class MemoryStore final : public ObjectStore {
 protected:
  void backend_put(const std::string& key, const std::string& bytes) override;
  std::optional<std::string> backend_get(const std::string& key) const override;
  void backend_remove(const std::string& key) override;

 private:
  mutable std::mutex objects_mu_;
  std::map<std::string, std::string> objects_;
};

// Maps key a/b/c to <root>/a/b/c. Existing files are adopted at open in
// sorted-key order; creation ticks are not persisted across processes.
class DirectoryStore final : public ObjectStore {
 public:
  explicit DirectoryStore(std::string root);

  const std::string& root() const { return root_; }

 protected:
  void backend_put(const std::string& key, const std::string& bytes) override;
  std::optional<std::string> backend_get(const std::string& key) const override;
  void backend_remove(const std::string& key) override;

 private:
  std::string path_for(const std::string& key) const;
  std::string root_;
};

}  // namespace lakecov
