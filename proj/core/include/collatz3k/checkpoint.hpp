#pragma once

#include <optional>
#include <string>
#include <vector>

#include "collatz3k/natural.hpp"
#include "collatz3k/verifier.hpp"

namespace collatz3k {

// One line of the append-only checkpoint file (JSON lines). Each record is
// self-contained: the sweep configuration, the resume cursor, running
// aggregates, and the full non-timing summary of the chunk just committed.
// Carrying the chunk summaries is what lets a resumed sweep reconstruct a
// report identical to an uninterrupted one.
struct CheckpointRecord {
  int schema_version = 1;
  unsigned k = 0;
  Natural start;
  Natural end;
  std::uint64_t budget = 0;
  std::uint64_t chunk_size = 0;
  Natural next_start;        // first value not yet committed
  Natural verified_through;  // last committed value
  std::optional<std::uint64_t> max_t;  // running maximum so far
  Natural max_t_n;
  std::string timestamp;  // ISO 8601 UTC, informational only
  ChunkResult chunk;
};

std::string to_json_line(const CheckpointRecord& rec);

// Appends one record per call and fsyncs before returning, so a committed
// chunk survives a crash of the process or the machine.
class CheckpointWriter {
 public:
  explicit CheckpointWriter(const std::string& path);
  ~CheckpointWriter();
  CheckpointWriter(const CheckpointWriter&) = delete;
  CheckpointWriter& operator=(const CheckpointWriter&) = delete;

  void append(const CheckpointRecord& rec);

 private:
  int fd_ = -1;
  std::string path_;
};

struct ResumeState {
  std::vector<ChunkResult> chunks;  // committed chunks, in range order
  Natural next_start;
};

// Reads a checkpoint file and validates it against cfg. Returns nullopt if
// the file does not exist or holds no complete record. Throws
// CheckpointMismatchError when the stored configuration differs from cfg
// and CheckpointIoError on unreadable or corrupt content. A partial final
// line (interrupted write) is tolerated and ignored.
std::optional<ResumeState> load_checkpoint(const std::string& path,
                                           const SweepConfig& cfg);

}  // namespace collatz3k
