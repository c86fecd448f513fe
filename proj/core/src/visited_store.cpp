#include "visited_store.hpp"

#include <algorithm>
#include <fstream>
#include <queue>

#include "cubeflip/errors.hpp"

namespace cubeflip {

namespace {

// Disk runs are sequences of length-prefixed records.
class RunReader {
 public:
  explicit RunReader(const std::filesystem::path& path) : in_(path, std::ios::binary) {
    advance();
  }
  bool done() const { return done_; }
  const std::string& current() const { return current_; }
  void advance() {
    std::uint32_t len = 0;
    if (!in_.read(reinterpret_cast<char*>(&len), sizeof len)) {
      done_ = true;
      return;
    }
    current_.resize(len);
    if (!in_.read(current_.data(), len)) fail(Errc::parse, "truncated visited-store run");
  }

 private:
  std::ifstream in_;
  std::string current_;
  bool done_ = false;
};

void write_record(std::ofstream& out, const std::string& key) {
  std::uint32_t len = static_cast<std::uint32_t>(key.size());
  out.write(reinterpret_cast<const char*>(&len), sizeof len);
  out.write(key.data(), static_cast<std::streamsize>(key.size()));
}

}  // namespace

VisitedStore::VisitedStore(std::size_t budget_bytes, std::filesystem::path spill_dir)
    : budget_bytes_(budget_bytes), dir_(std::move(spill_dir)) {}

VisitedStore::~VisitedStore() {
  std::error_code ec;
  for (const auto& f : files_) std::filesystem::remove(f, ec);
}

std::vector<std::string> VisitedStore::filter_new(std::vector<std::string> candidates) const {
  if (candidates.empty()) return candidates;
  std::vector<bool> seen(candidates.size(), false);

  for (const auto& run : runs_) {
    std::size_t i = 0;
    for (const auto& key : run) {
      while (i < candidates.size() && candidates[i] < key) ++i;
      if (i == candidates.size()) break;
      if (candidates[i] == key) seen[i] = true;
    }
  }
  for (const auto& file : files_) {
    RunReader reader(file);
    std::size_t i = 0;
    while (!reader.done() && i < candidates.size()) {
      if (reader.current() < candidates[i]) {
        reader.advance();
      } else {
        if (candidates[i] == reader.current()) seen[i] = true;
        ++i;
      }
    }
  }

  std::vector<std::string> fresh;
  fresh.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!seen[i]) fresh.push_back(std::move(candidates[i]));
  return fresh;
}

void VisitedStore::insert(std::vector<std::string> keys) {
  if (keys.empty()) return;
  count_ += keys.size();
  for (const auto& k : keys) memory_bytes_ += k.size() + sizeof(std::string);
  runs_.push_back(std::move(keys));
  if (memory_bytes_ > budget_bytes_) spill_to_disk();
}

// Full compaction: merge every in-memory and on-disk run into one file.
void VisitedStore::spill_to_disk() {
  std::filesystem::create_directories(dir_);
  std::filesystem::path target =
      dir_ / ("visited-run-" + std::to_string(next_file_id_++) + ".bin");
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::parse, "cannot create spill file " + target.string());
  for_each([&out](const std::string& key) { write_record(out, key); });
  out.close();

  std::error_code ec;
  for (const auto& f : files_) std::filesystem::remove(f, ec);
  files_.clear();
  runs_.clear();
  memory_bytes_ = 0;
  files_.push_back(target);
}

void VisitedStore::for_each(const std::function<void(const std::string&)>& fn) const {
  // K-way merge over memory runs and disk runs. Keys are unique across runs.
  struct Source {
    const std::vector<std::string>* run = nullptr;
    std::size_t pos = 0;
    std::unique_ptr<RunReader> reader;

    bool done() const { return run ? pos >= run->size() : reader->done(); }
    const std::string& current() const { return run ? (*run)[pos] : reader->current(); }
    void advance() {
      if (run)
        ++pos;
      else
        reader->advance();
    }
  };

  std::vector<Source> sources;
  for (const auto& run : runs_) {
    Source s;
    s.run = &run;
    sources.push_back(std::move(s));
  }
  for (const auto& file : files_) {
    Source s;
    s.reader = std::make_unique<RunReader>(file);
    sources.push_back(std::move(s));
  }

  auto cmp = [&sources](std::size_t a, std::size_t b) {
    return sources[b].current() < sources[a].current();
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> heap(cmp);
  for (std::size_t i = 0; i < sources.size(); ++i)
    if (!sources[i].done()) heap.push(i);
  while (!heap.empty()) {
    std::size_t i = heap.top();
    heap.pop();
    fn(sources[i].current());
    sources[i].advance();
    if (!sources[i].done()) heap.push(i);
  }
}

}  // namespace cubeflip
