#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "chernlab/errors.hpp"
#include "chernlab/groebner.hpp"

namespace chern::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;
inline constexpr const char* kVersion = "0.1.0";

struct Job {
  std::string command;
  std::string ring;
  std::string ideal;
  std::string module;
  std::string order;
  std::string field;
  unsigned nmax = 8;
  unsigned samples = 0;
  std::uint64_t seed = 1;
  unsigned degree = 1;
  bool json = false;
  std::string out;
  std::optional<unsigned> example_1;
  std::optional<std::pair<unsigned, unsigned>> example_2;
  // verify-paper
  unsigned example = 0;
  unsigned d = 3;
  unsigned a = 2;
  unsigned b = 2;

  Json echo() const;
};

/// A command that failed after producing a partial result (assertion
/// failures, unstabilised series); the document is still emitted.
class CommandFailure : public Error {
 public:
  CommandFailure(const std::string& what, int exit_code, Json result)
      : Error(what), exit_code_(exit_code), result_(std::move(result)) {}
  int exit_code() const noexcept { return exit_code_; }
  const Json& result() const noexcept { return result_; }

 private:
  int exit_code_;
  Json result_;
};

/// Ring and module resolved from --ring/--field/--order or an example flag.
struct Setup {
  RingSpec ring;
  Ideal module;
};

Setup resolve(const Job& job);
Ideal resolve_ideal(const Job& job, const RingSpec& ring);

Json cmd_gb(const Job& job);
Json cmd_invariants(const Job& job);
Json cmd_decompose(const Job& job);
Json cmd_check(const Job& job);
Json cmd_verify_paper(const Job& job);

std::string render_text(const Json& doc);

}  // namespace chern::cli
