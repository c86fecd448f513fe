#pragma once

// Sorted-run store for visited canonical forms. Keys accumulate in sorted
// in-memory runs; when the total exceeds the memory budget the runs are
// merged into a sorted file on disk. Membership filtering streams each run
// once per query batch, so the BFS costs one linear pass per level.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace cubeflip {

class VisitedStore {
 public:
  VisitedStore(std::size_t budget_bytes, std::filesystem::path spill_dir);
  ~VisitedStore();

  VisitedStore(const VisitedStore&) = delete;
  VisitedStore& operator=(const VisitedStore&) = delete;

  /// Keeps only the candidates not already present. `candidates` must be
  /// sorted and unique.
  std::vector<std::string> filter_new(std::vector<std::string> candidates) const;

  /// Inserts keys known to be absent. `keys` must be sorted and unique.
  void insert(std::vector<std::string> keys);

  std::uint64_t size() const { return count_; }
  std::size_t bytes_in_memory() const { return memory_bytes_; }
  int disk_runs() const { return static_cast<int>(files_.size()); }

  /// Visits all keys in ascending order.
  void for_each(const std::function<void(const std::string&)>& fn) const;

 private:
  void spill_to_disk();

  std::size_t budget_bytes_;
  std::filesystem::path dir_;
  std::vector<std::vector<std::string>> runs_;  // each sorted
  std::vector<std::filesystem::path> files_;    // sorted runs on disk
  std::size_t memory_bytes_ = 0;
  std::uint64_t count_ = 0;
  int next_file_id_ = 0;
};

}  // namespace cubeflip
