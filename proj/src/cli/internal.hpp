#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace cuspsemi::cli {

/// Inclusive integer range parsed from "a..b" or "a".
struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

Range parse_range(const std::string& text);
std::vector<std::int64_t> parse_list(const std::string& text);

struct VerifyParams {
  std::int64_t max_abc = 0;  // 0 selects the theorem's default
  Range l{0, -1};            // empty selects the default
  Range m{0, -1};
  std::int64_t l_max = 0;
  int trials = 3;
  std::uint64_t seed = 1;
  std::uint64_t prime = 0;
  int instances = 200;
};

struct InstanceResult {
  std::string instance;
  bool in_hypothesis = true;
  bool pass = true;
  std::string detail;
};

struct VerifyResult {
  std::string theorem;
  std::vector<InstanceResult> instances;
  std::vector<std::string> findings;

  bool passed() const;
};

struct TheoremInfo {
  std::string id;
  std::string statement;
  std::string flags;
};

const std::vector<TheoremInfo>& theorem_catalog();
bool known_theorem(const std::string& id);
VerifyResult verify(const std::string& id, const VerifyParams& params);

enum class Format { csv, json };

struct SweepConfig {
  std::string family;  // arith | supersym | generic
  std::int64_t max_abc = 2000;
  std::int64_t min_a = 2;
  Range m{2, 2};
  Range l{4, 8};
  int trials = 3;
  std::uint64_t prime = 0;
  std::uint64_t seed = 1;
  Format format = Format::csv;
  unsigned threads = 0;  // 0 selects hardware concurrency
};

/// Full sweep output (CSV per RFC 4180 with LF line endings, or JSON).
std::string sweep(const SweepConfig& config);

/// Runs `count` independent jobs on worker threads; results land in index order.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job);

}  // namespace cuspsemi::cli
