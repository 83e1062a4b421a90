#include "collatz3k/checkpoint.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "collatz3k/errors.hpp"
#include "json_detail.hpp"

namespace collatz3k {

namespace detail {

nlohmann::json chunk_to_json(const ChunkResult& chunk) {
  using nlohmann::json;
  json failures = json::array();
  for (const auto& f : chunk.failures)
    failures.push_back(
        {{"n", to_decimal(f.n)}, {"status", std::string(to_string(f.status))}});
  return json{{"first", to_decimal(chunk.first)},
              {"last", to_decimal(chunk.last)},
              {"verified", chunk.verified},
              {"failures", std::move(failures)},
              {"max_t", chunk.max_t ? json(*chunk.max_t) : json(nullptr)},
              {"max_t_n", chunk.max_t ? to_decimal(chunk.max_t_n) : ""},
              {"odd_max", chunk.odd_max},
              {"elapsed_s", chunk.elapsed_s}};
}

}  // namespace detail

namespace {

using nlohmann::json;

TerminationStatus status_from_string(const std::string& text) {
  if (text == "reached_target") return TerminationStatus::ReachedTarget;
  if (text == "budget_exhausted") return TerminationStatus::BudgetExhausted;
  if (text == "cycle_without_target")
    return TerminationStatus::CycleWithoutTarget;
  throw CheckpointIoError("checkpoint: unknown status '" + text + "'");
}

ChunkResult chunk_from_json(const json& j) {
  ChunkResult chunk;
  chunk.first = parse_natural(j.at("first").get<std::string>());
  chunk.last = parse_natural(j.at("last").get<std::string>());
  chunk.verified = j.at("verified").get<std::uint64_t>();
  for (const auto& f : j.at("failures")) {
    SweepFailure failure;
    failure.n = parse_natural(f.at("n").get<std::string>());
    failure.status = status_from_string(f.at("status").get<std::string>());
    chunk.failures.push_back(std::move(failure));
  }
  if (!j.at("max_t").is_null()) {
    chunk.max_t = j.at("max_t").get<std::uint64_t>();
    chunk.max_t_n = parse_natural(j.at("max_t_n").get<std::string>());
  }
  chunk.odd_max = j.at("odd_max").get<std::uint64_t>();
  chunk.elapsed_s = j.at("elapsed_s").get<double>();
  return chunk;
}

}  // namespace

std::string to_json_line(const CheckpointRecord& rec) {
  json j{{"schema_version", rec.schema_version},
         {"k", rec.k},
         {"start", to_decimal(rec.start)},
         {"end", to_decimal(rec.end)},
         {"budget", rec.budget},
         {"chunk_size", rec.chunk_size},
         {"next_start", to_decimal(rec.next_start)},
         {"verified_through", to_decimal(rec.verified_through)},
         {"max_t", rec.max_t ? json(*rec.max_t) : json(nullptr)},
         {"max_t_n", rec.max_t ? to_decimal(rec.max_t_n) : ""},
         {"timestamp", rec.timestamp},
         {"chunk", detail::chunk_to_json(rec.chunk)}};
  return j.dump();
}

CheckpointWriter::CheckpointWriter(const std::string& path) : path_(path) {
  fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd_ < 0)
    throw CheckpointIoError("cannot open checkpoint '" + path +
                            "': " + std::strerror(errno));
}

CheckpointWriter::~CheckpointWriter() {
  if (fd_ >= 0) ::close(fd_);
}

void CheckpointWriter::append(const CheckpointRecord& rec) {
  const std::string line = to_json_line(rec) + "\n";
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t n =
        ::write(fd_, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw CheckpointIoError("cannot write checkpoint '" + path_ +
                              "': " + std::strerror(errno));
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(fd_) != 0)
    throw CheckpointIoError("cannot sync checkpoint '" + path_ +
                            "': " + std::strerror(errno));
}

std::optional<ResumeState> load_checkpoint(const std::string& path,
                                           const SweepConfig& cfg) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in)
    throw CheckpointIoError("cannot read checkpoint '" + path + "'");

  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(std::move(line));
  }
  if (in.bad())
    throw CheckpointIoError("cannot read checkpoint '" + path + "'");
  if (lines.empty()) return std::nullopt;

  ResumeState state;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    json j = json::parse(lines[i], nullptr, false);
    if (j.is_discarded()) {
      // A torn final line means the process died mid-append; anything
      // earlier is corruption.
      if (i + 1 == lines.size()) break;
      throw CheckpointIoError("corrupt checkpoint '" + path + "' at line " +
                              std::to_string(i + 1));
    }
    try {
      if (j.at("schema_version").get<int>() != 1)
        throw CheckpointIoError("checkpoint '" + path +
                                "' has an unsupported schema version");
      auto mismatch = [&](const std::string& field) {
        throw CheckpointMismatchError("checkpoint '" + path + "' was written for a different sweep (" +
                                      field + " differs)");
      };
      if (j.at("k").get<unsigned>() != cfg.k) mismatch("k");
      if (parse_natural(j.at("start").get<std::string>()) != cfg.start)
        mismatch("start");
      if (parse_natural(j.at("end").get<std::string>()) != cfg.end)
        mismatch("end");
      if (j.at("budget").get<std::uint64_t>() != cfg.budget) mismatch("budget");
      if (j.at("chunk_size").get<std::uint64_t>() != cfg.chunk_size)
        mismatch("chunk_size");

      ChunkResult chunk = chunk_from_json(j.at("chunk"));
      const Natural expect_first =
          state.chunks.empty() ? cfg.start : state.chunks.back().last + 1;
      if (chunk.first != expect_first ||
          parse_natural(j.at("next_start").get<std::string>()) !=
              chunk.last + 1)
        throw CheckpointIoError("checkpoint '" + path +
                                "' has non-contiguous chunks at line " +
                                std::to_string(i + 1));
      state.next_start = chunk.last + 1;
      state.chunks.push_back(std::move(chunk));
    } catch (const json::exception& e) {
      throw CheckpointIoError("corrupt checkpoint '" + path + "' at line " +
                              std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (state.chunks.empty()) return std::nullopt;
  return state;
}

}  // namespace collatz3k
